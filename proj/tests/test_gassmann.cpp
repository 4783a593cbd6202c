#include "doctest.h"

#include <random>

#include "ffeq/gassmann.hpp"

using namespace ffeq;

TEST_CASE("the (m,u) model is a group of order 32") {
    auto model = build_8t15();
    CHECK(model.group->order() == 32);
    CHECK(model.a.order() == 8);
    CHECK(model.a.is_cyclic());
    CHECK(model.section_h.order() == 4);
    CHECK_FALSE(model.section_h.is_cyclic());  // V_4
    std::vector<int> tw{model.id_of(0, 1), model.id_of(4, 3), model.id_of(4, 5), model.id_of(0, 7)};
    std::sort(tw.begin(), tw.end());
    CHECK(model.twisted_h.elems == tw);
}

TEST_CASE("conjugacy classes partition the group") {
    auto model = build_8t15();
    auto classes = model.group->conjugacy_classes();
    size_t total = 0;
    bool identity_singleton = false;
    for (const auto& c : classes) {
        total += c.size();
        if (c.size() == 1 && c[0] == model.group->identity()) identity_singleton = true;
    }
    CHECK(total == 32);
    CHECK(identity_singleton);

    // Independent oracle: pairwise conjugacy testing, different code path.
    auto conjugate_elems = [&](int x, int y) {
        for (int g = 0; g < 32; ++g)
            if (model.group->conj(x, g) == y) return true;
        return false;
    };
    int class_count = 0;
    std::vector<bool> seen(32, false);
    for (int x = 0; x < 32; ++x) {
        if (seen[x]) continue;
        ++class_count;
        for (int y = 0; y < 32; ++y)
            if (conjugate_elems(x, y)) seen[y] = true;
    }
    CHECK(static_cast<int>(classes.size()) == class_count);
}

TEST_CASE("gassmann equivalence of the section and its twist") {
    auto model = build_8t15();
    CHECK(is_gassmann_equivalent(model.section_h, model.twisted_h));
    CHECK(is_gassmann_equivalent(model.section_h, model.section_h));
    CHECK_FALSE(is_gassmann_equivalent(model.section_h, model.a));  // different orders
    CHECK_FALSE(are_conjugate_subgroups(model.section_h, model.twisted_h));
    // Conjugates are conjugate.
    std::mt19937_64 rng(0x8a);
    for (int i = 0; i < 10; ++i) {
        int g = static_cast<int>(rng() % 32);
        std::vector<int> image;
        for (int x : model.section_h.elems) image.push_back(model.group->conj(x, g));
        Subgroup conj_h(model.group, image);
        CHECK(are_conjugate_subgroups(model.section_h, conj_h));
    }
    Subgroup trivial(model.group, {model.group->identity()});
    CHECK_FALSE(are_conjugate_subgroups(model.section_h, trivial));
}

TEST_CASE("coset types") {
    auto model = build_8t15();
    CHECK(coset_type(model.section_h, model.a) == SplittingType({8}));
    Subgroup trivial(model.group, {model.group->identity()});
    CHECK(coset_type(model.section_h, trivial) == SplittingType({1, 1, 1, 1, 1, 1, 1, 1}));
    // Entries always sum to the index, for every cyclic subgroup.
    for (int g = 0; g < 32; ++g) {
        Subgroup cyc = generated_subgroup(model.group, {g});
        CHECK(coset_type(model.section_h, cyc).sum() == 8);
    }
    CHECK_THROWS_AS(coset_type(model.a, model.section_h), std::invalid_argument);  // V_4 not cyclic
}

TEST_CASE("gassmann equivalence matches equal coset types on order-4 subgroups") {
    auto model = build_8t15();
    auto subs = all_subgroups(model.group);
    std::vector<Subgroup> order4;
    for (const auto& h : subs)
        if (h.order() == 4) order4.push_back(h);
    std::vector<Subgroup> cyclics;
    for (int g = 0; g < 32; ++g) cyclics.push_back(generated_subgroup(model.group, {g}));
    for (size_t i = 0; i < order4.size(); ++i)
        for (size_t j = i; j < order4.size(); ++j) {
            bool gas = is_gassmann_equivalent(order4[i], order4[j]);
            bool same_types = true;
            for (const auto& c : cyclics)
                if (coset_type(order4[i], c) != coset_type(order4[j], c)) {
                    same_types = false;
                    break;
                }
            CHECK(gas == same_types);
            if (are_conjugate_subgroups(order4[i], order4[j])) CHECK(gas);
        }
}

TEST_CASE("no small symmetric group admits non-conjugate equivalent subgroups") {
    for (int n : {3, 4}) {
        auto g = FiniteGroup::symmetric(n);
        auto subs = all_subgroups(g);
        for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = i + 1; j < subs.size(); ++j) {
                if (subs[i].order() != subs[j].order()) continue;
                if (is_gassmann_equivalent(subs[i], subs[j]))
                    CHECK(are_conjugate_subgroups(subs[i], subs[j]));
            }
    }
}

TEST_CASE("cocycle certificate") {
    auto model = build_8t15();
    CHECK_FALSE(is_coboundary(model.chi, model.section_h, model.a));
    auto w3 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 3), model.a);
    auto w5 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 5), model.a);
    REQUIRE(!w3.empty());
    REQUIRE(!w5.empty());
    CHECK(std::find(w3.begin(), w3.end(), model.id_of(2, 1)) != w3.end());  // phi_2
    CHECK(std::find(w5.begin(), w5.end(), model.id_of(3, 1)) != w5.end());  // phi_3
    // A non-cocycle map is rejected.
    std::vector<int> vals{model.id_of(1, 1), model.id_of(0, 1), model.id_of(0, 1), model.id_of(0, 1)};
    CHECK_THROWS_AS(Cocycle(model.group, model.section_h.elems, vals), std::invalid_argument);
}

TEST_CASE("exhaustive cohomology search finds the displayed cocycle") {
    auto model = build_8t15();
    auto found = cohomology_search(model.section_h, model.a);
    bool has_chi = false;
    for (const auto& c : found)
        if (c.values == model.chi.values) has_chi = true;
    CHECK(has_chi);
    CHECK_THROWS_AS(cohomology_search(model.section_h, model.a, 10), std::invalid_argument);
}

TEST_CASE("predicted densities") {
    auto model = build_8t15();
    auto dens = predicted_densities(model.section_h);
    int num_sum = 0;
    for (const auto& [t, frac] : dens) {
        (void)t;
        CHECK(frac.second == 32);
        num_sum += frac.first;
    }
    CHECK(num_sum == 32);  // densities sum to 1
    CHECK(dens.count(SplittingType({8})));
    CHECK(dens.at(SplittingType({8})).first > 0);
    CHECK(predicted_densities(model.twisted_h) == dens);
}

TEST_CASE("group table validation") {
    CHECK_THROWS_AS(FiniteGroup::make({{0, 1}, {0, 1}}), std::invalid_argument);
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->element_order(s3->identity()) == 1);
}
