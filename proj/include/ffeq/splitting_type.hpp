#pragma once

#include <string>
#include <vector>

namespace ffeq {

/// Sorted non-decreasing multiset of inertia degrees (f_1 <= ... <= f_r).
/// For unramified primes the entries sum to the field degree over the base.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    int sum() const;
    /// Multiplicity of m among the entries (the prime-power count C(m)).
    int count_of(int m) const;

    bool operator==(const SplittingType& o) const { return degrees_ == o.degrees_; }
    bool operator!=(const SplittingType& o) const { return !(*this == o); }
    bool operator<(const SplittingType& o) const { return degrees_ < o.degrees_; }

    std::string str() const;  // "(1,1,2,2)" style

private:
    std::vector<int> degrees_;
};

}  // namespace ffeq
