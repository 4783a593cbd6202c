#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffeq/poly.hpp"
#include "ffeq/splitting_type.hpp"
#include "ffeq/tower.hpp"

namespace ffeq {

using BigInt = boost::multiprecision::cpp_int;

/// A finite prime of F_q[T]: a monic irreducible generator over the canonical
/// field with q elements (q = 2 or 4 here).  Irreducibility is certified at
/// construction.
struct PrimeOfBase {
    int q;
    Poly gen;

    static PrimeOfBase make(int q, Poly gen);
    int degree() const { return gen.degree(); }
    std::string str() const;
};

/// The canonical base coefficient field for q = 2 or 4.
FqFieldPtr base_field(int q);
/// Monic irreducible polynomials over the base, degree exactly d / up to d.
std::vector<PrimeOfBase> primes_of_degree(int q, int d);
std::vector<PrimeOfBase> primes_up_to(int q, int d);

/// A finite separable extension of F_q(T), described either by a quadratic
/// tower (the primary representation) or by a monic separable polynomial over
/// F_q[T] (cross-check representation).  For base_q = 4 the first tower
/// generator must be the constant layer z (relation 1); it is absorbed into
/// the residue fields of the base primes.
struct FieldDesc {
    std::string name;
    int base_q = 2;
    TowerSpecPtr tower;                      // tower form (preferred)
    std::vector<Poly> poly;                  // monic X-polynomial coefficients, or empty

    static FieldDesc from_tower(std::string name, int base_q, TowerSpecPtr tower);
    static FieldDesc from_poly(std::string name, int base_q, std::vector<Poly> coeffs);
    int degree() const;  // over F_q(T)
};

/// Splitting type via the layer-by-layer residue walk.  Each Artin-Schreier
/// layer either splits a prime (both roots exist in the residue field) or
/// leaves it inert (extend the residue field by the new root); the constant
/// layer z behaves the same through X^2+X+1.  Always conclusive for towers
/// of Artin-Schreier layers, which are unramified at finite places.
SplittingType splitting_type_tower(const FieldDesc& k, const PrimeOfBase& p);

/// Dedekind reduction cross-check: factor the defining polynomial over the
/// residue field; returns nullopt ("inconclusive") when the reduction is not
/// squarefree, never a guess.
std::optional<SplittingType> splitting_type_dedekind(const std::vector<Poly>& h,
                                                     const PrimeOfBase& p);

/// Splitting type of a FieldDesc by its preferred representation.
SplittingType splitting_type(const FieldDesc& k, const PrimeOfBase& p);

/// C(m) = number of primes above p with norm p^m, for m <= mmax.
std::map<int, int> prime_power_counts(const SplittingType& st, int mmax);

/// Number of ideals with norm p^m from the prime-power counts: the sum over
/// systems of distinct degrees m_1 < ... < m_r with multiplicities a_i >= 1,
/// sum a_i*m_i = m, of prod binom(C(m_i)+a_i-1, a_i).  Exact big integers.
BigInt b_prime_power(const std::map<int, int>& counts, int m);

/// Independent oracle: enumerate the multisets of primes above the prime
/// factors of f whose norms multiply to exactly f.
BigInt brute_force_ideal_count(const FieldDesc& k, const Poly& f);

/// Ideal-count table over all monic f with deg f <= max_degree:
/// B(f) in characteristic 0 (multiplicative over coprime prime powers) and
/// A(f) = B(f) mod p.
struct IdealCountRow {
    Poly f;
    int a;
    BigInt b;
};
struct IdealCountTable {
    std::string field_name;
    int max_degree;
    int p;
    std::vector<IdealCountRow> rows;  // enumeration order, f = 1 first

    const IdealCountRow& row_of(const Poly& f) const;
};
IdealCountTable ideal_count_table(const FieldDesc& k, int max_degree, int p = 2);

/// Per-prime comparison of splitting types of two fields over one base.
struct SweepMismatch {
    PrimeOfBase prime;
    SplittingType left, right;
};
struct SweepReport {
    std::string left_name, right_name;
    int base_q;
    int max_degree;
    int primes_checked = 0;
    std::vector<SweepMismatch> mismatches;
};
SweepReport equivalence_sweep(const FieldDesc& k, const FieldDesc& l, int max_degree);

/// Empirical splitting-type frequencies over the primes of degree <= max_deg.
struct ChebotarevReport {
    int primes_total = 0;
    std::map<SplittingType, int> counts;
    double frequency(const SplittingType& t) const;
};
ChebotarevReport chebotarev_frequencies(const FieldDesc& k, int max_degree);

/// JSON-lines cache of splitting types keyed by (field, base_q, prime).
/// Append-only; one record per line.
class SplittingCache {
public:
    explicit SplittingCache(std::string path);
    std::optional<SplittingType> lookup(const std::string& field, int q, const std::string& prime) const;
    void store(const std::string& field, int q, const std::string& prime, const SplittingType& t);

private:
    std::string path_;
    std::map<std::string, SplittingType> mem_;
};

}  // namespace ffeq
