#include "ffeq/paperlab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ffeq/gassmann.hpp"
#include "ffeq/textio.hpp"

namespace ffeq {

using nlohmann::json;

void VerificationReport::add(std::string check, std::string cite, bool pass, std::string expected,
                             std::string computed) {
    entries.push_back(CheckEntry{std::move(check), std::move(cite), pass ? "pass" : "fail",
                                 std::move(expected), std::move(computed)});
}

void VerificationReport::add_discrepancy(std::string check, std::string cite, std::string expected,
                                         std::string computed) {
    entries.push_back(CheckEntry{std::move(check), std::move(cite), "paper-discrepancy",
                                 std::move(expected), std::move(computed)});
}

int VerificationReport::fail_count() const {
    int n = 0;
    for (const auto& e : entries) n += e.status == "fail";
    return n;
}

int VerificationReport::discrepancy_count() const {
    int n = 0;
    for (const auto& e : entries) n += e.status == "paper-discrepancy";
    return n;
}

std::string VerificationReport::to_json() const {
    json out;
    out["entries"] = json::array();
    for (const auto& e : entries) {
        out["entries"].push_back(json{{"check", e.check},
                                      {"cite", e.cite},
                                      {"status", e.status},
                                      {"expected", e.expected},
                                      {"computed", e.computed}});
    }
    out["summary"] = json{{"pass", static_cast<int>(entries.size()) - fail_count() - discrepancy_count()},
                          {"fail", fail_count()},
                          {"paper_discrepancy", discrepancy_count()}};
    return out.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.status == "pass" ? "PASS " : e.status == "fail" ? "FAIL " : "PAPER-DISCREPANCY ")
           << e.check << "  [" << e.cite << "]\n";
        if (e.status != "pass") {
            os << "    expected: " << e.expected << "\n";
            os << "    computed: " << e.computed << "\n";
        }
    }
    os << "pass=" << entries.size() - fail_count() - discrepancy_count() << " fail=" << fail_count()
       << " paper-discrepancy=" << discrepancy_count() << "\n";
    return os.str();
}

std::vector<F2Poly> eq_display(int which, int p) {
    auto build = [](std::vector<std::vector<int>> exps) {
        std::vector<F2Poly> out;
        out.reserve(exps.size());
        for (auto& e : exps) out.push_back(F2Poly::from_exponents(e));
        return out;
    };
    switch (which) {
        case 3:
            return build({{10, 8, 6},
                          {7, 4},
                          {7, 5, 3, 2},
                          {1},
                          {5, 4, 3, 2, 1, 0},
                          {1},
                          {1},
                          {},
                          {0}});
        case 4:
            return build({{12, 11, 9, 7, 6},
                          {4},
                          {5, 4, 3, 2},
                          {1},
                          {5, 3, 2, 1, 0},
                          {1},
                          {1},
                          {},
                          {0}});
        case 7:
            return build({{10, 8, 5},
                          {5, 4, 3},
                          {5},
                          {},
                          {4, 3, 0},
                          {},
                          {},
                          {},
                          {0}});
        case 5:
            if (p < 2) throw std::invalid_argument("family template requires p");
            return build({{4 * p, 3 * p + 2, 2 * p + 5, 2 * p + 4, 2 * p + 2, p + 6, p + 5, p + 4, 10, 8, 6},
                          {2 * p + 2, 2 * p + 1, p + 4, p + 3, p + 2, 7, 4},
                          {2 * p + 2, 2 * p + 1, 2 * p, p + 4, p + 3, p + 1, 7, 5, 3, 2},
                          {1},
                          {2 * p, p + 2, p + 1, 5, 4, 3, 2, 1, 0},
                          {1},
                          {1},
                          {},
                          {0}});
        case 6:
            if (p < 2) throw std::invalid_argument("family template requires p");
            return build(
                {{4 * p, 3 * p + 2, 2 * p + 4, 2 * p + 2, p + 8, p + 6, p + 5, p + 4, 12, 9, 8, 7, 6},
                 {2 * p + 2, 2 * p + 1, p + 4, p + 3, p + 2, 8, 7, 6, 5, 4},
                 {2 * p + 2, 2 * p + 1, 2 * p, p + 4, p + 3, p + 1, 8, 7, 5, 4, 3, 2},
                 {1},
                 {2 * p, p + 2, p + 1, 6, 3, 2, 1, 0},
                 {1},
                 {1},
                 {},
                 {0}});
        default:
            throw std::invalid_argument("unknown display polynomial");
    }
}

FieldDesc field_desc(const std::string& preset, int base_q) {
    if (preset == "rational") {
        auto base = base_field(base_q);
        return FieldDesc::from_poly("rational", base_q, {Poly::zero(base), Poly::one(base)});
    }
    return FieldDesc::from_tower(preset, base_q, preset_tower(preset));
}

PaperPair build_paper_pair(int p) {
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("family parameter must be prime");
    if (p < 2) throw std::invalid_argument("family parameter must be prime");
    std::string ps = std::to_string(p);
    return PaperPair{field_desc("paper:K(" + ps + ")", 2), field_desc("paper:Kprime(" + ps + ")", 2),
                     eq_display(5, p), eq_display(6, p)};
}

XPolyT family_min_poly(int p, bool primed) {
    auto K = preset_tower("paper:K");
    auto s4 = TowerSpec::extend(K, "at3", TowerElement::rational(K, F2Poly::monomial(3)));
    TowerSpecPtr spec;
    TowerElement elt = TowerElement::zero(s4);
    if (p == 3) {
        spec = s4;
        TowerElement b = TowerElement::generator(spec, 2);
        TowerElement at3 = TowerElement::generator(spec, 3);
        elt = primed ? b : b + at3;  // b + at3 + at3 collapses to b
    } else {
        spec = TowerSpec::extend(s4, "atp", TowerElement::rational(s4, F2Poly::monomial(p)));
        TowerElement b = TowerElement::generator(spec, 2);
        TowerElement at3 = TowerElement::generator(spec, 3);
        TowerElement atp = TowerElement::generator(spec, 4);
        elt = primed ? b + atp + at3 : b + atp;
    }
    return min_poly(elt);
}

namespace {

std::string fmt_coeffs(const std::vector<F2Poly>& coeffs) {
    std::string s;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string xs = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
        if (xs.empty()) {
            s += "(" + coeffs[i].str() + ")";
        } else if (coeffs[i].is_one()) {
            s += xs;
        } else {
            std::string c = coeffs[i].str();
            if (c.find('+') != std::string::npos) c = "(" + c + ")";
            s += c + "*" + xs;
        }
    }
    return s.empty() ? "0" : s;
}

bool same_coeffs(const std::vector<F2Poly>& a, const std::vector<F2Poly>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        F2Poly x = i < a.size() ? a[i] : F2Poly();
        F2Poly y = i < b.size() ? b[i] : F2Poly();
        if (x != y) return false;
    }
    return true;
}

// The four conjugate constants of (T^2+zT)a over F_2(T), living in L=[z,a,at].
std::vector<TowerElement> beta_conjugate_constants(const TowerSpecPtr& L) {
    TowerElement z = TowerElement::generator(L, 0);
    TowerElement a = TowerElement::generator(L, 1);
    TowerElement at = TowerElement::generator(L, 2);
    TowerElement one = TowerElement::one(L);
    auto t = [&](int n) { return TowerElement::rational(L, F2Poly::monomial(n)); };
    TowerElement c1 = (t(2) + z * t(1)) * a;
    TowerElement c2 = (t(2) + z * t(1)) * (a + one);
    TowerElement c3 = (t(2) + (z + one) * t(1)) * (a + at);
    TowerElement c4 = (t(2) + (z + one) * t(1)) * (a + at + one);
    return {c1, c2, c3, c4};
}

std::vector<TowerElement> gamma_conjugate_constants(const TowerSpecPtr& L) {
    TowerElement z = TowerElement::generator(L, 0);
    TowerElement a = TowerElement::generator(L, 1);
    TowerElement at = TowerElement::generator(L, 2);
    TowerElement one = TowerElement::one(L);
    auto t = [&](int n) { return TowerElement::rational(L, F2Poly::monomial(n)); };
    TowerElement cg = a * t(1) + (t(2) + (z + one) * t(1)) * at;
    return {cg, cg + t(1), cg + (t(2) + (z + one) * t(1)), cg + (t(2) + z * t(1))};
}

void check_product(VerificationReport& rep, const std::string& name, const std::string& cite,
                   const std::vector<TowerElement>& constants, const std::vector<F2Poly>& expected) {
    std::vector<XPolyT> quads;
    quads.reserve(constants.size());
    for (const auto& c : constants) quads.push_back(artin_schreier_xpoly(c));
    XPolyT prod = conjugate_product(quads);
    auto got = prod.rational_coeffs();
    rep.add(name, cite, same_coeffs(got, expected), fmt_coeffs(expected), fmt_coeffs(got));
}

void check_min_poly(VerificationReport& rep, const std::string& name, const std::string& cite,
                    const XPolyT& mp, const std::vector<F2Poly>& expected) {
    if (!mp.has_rational_coeffs()) {
        rep.add(name, cite, false, fmt_coeffs(expected), "non-rational minimal polynomial " + mp.str());
        return;
    }
    auto got = mp.rational_coeffs();
    rep.add(name, cite, same_coeffs(got, expected), fmt_coeffs(expected), fmt_coeffs(got));
}

// Match-or-discrepancy: display formulas are adjudicated, not trusted.
void check_display(VerificationReport& rep, const std::string& name, const std::string& cite,
                   const std::vector<F2Poly>& computed, const std::vector<F2Poly>& display) {
    if (same_coeffs(computed, display)) {
        rep.add(name, cite, true, fmt_coeffs(display), fmt_coeffs(computed));
    } else {
        rep.add_discrepancy(name, cite, "display: " + fmt_coeffs(display),
                            "tower minimal polynomial: " + fmt_coeffs(computed));
    }
}

}  // namespace

void verify_defining_polynomials(int p, VerificationReport& rep) {
    auto L = preset_tower("paper:L");

    // Quadratic layers multiply out to the displayed degree-8 polynomials.
    check_product(rep, "eq3_conjugate_product", "Thm 4.5 step 4, Eq. (3)", beta_conjugate_constants(L),
                  eq_display(3));
    {
        auto cs = beta_conjugate_constants(L);
        for (auto& c : cs) c = c + TowerElement::rational(L, F2Poly::monomial(3));
        check_product(rep, "eq4_conjugate_product", "Thm 4.5 step 8, Eq. (4)", cs, eq_display(4));
    }
    check_product(rep, "eq7_conjugate_product", "Thm 4.5 step 5, Eq. (7)", gamma_conjugate_constants(L),
                  eq_display(7));

    // Minimal polynomials agree with the products.
    auto K = preset_tower("paper:K");
    check_min_poly(rep, "min_poly_beta_eq3", "Thm 4.5, Eq. (3)",
                   min_poly(TowerElement::generator(K, 2)), eq_display(3));
    check_min_poly(rep, "min_poly_beta_at3_eq4", "Thm 4.5 step 8, Eq. (4)", family_min_poly(3, false),
                   eq_display(4));
    {
        auto ctx = build_sibling_towers();
        check_min_poly(rep, "min_poly_gamma_eq7", "Thm 4.5 step 5, Eq. (7)", min_poly(ctx.gamma),
                       eq_display(7));
        check_min_poly(rep, "min_poly_zeta", "Section 4 tower diagram",
                       min_poly(ctx.zeta), {F2Poly::one(), F2Poly::one(), F2Poly::one()});
        check_min_poly(rep, "min_poly_alpha", "Section 4 step 2",
                       min_poly(ctx.alpha),
                       {F2Poly::from_exponents({2}), F2Poly::from_exponents({1}),
                        F2Poly::from_exponents({1, 0}), F2Poly::zero(), F2Poly::one()});
    }

    // Family displays at this p: exact match or an adjudicated discrepancy.
    XPolyT mk = family_min_poly(p, false);
    XPolyT mk2 = family_min_poly(p, true);
    check_display(rep, "family_K_display_p" + std::to_string(p), "Thm 4.6, Eq. (5)",
                  mk.rational_coeffs(), eq_display(5, p));
    check_display(rep, "family_Kprime_display_p" + std::to_string(p), "Thm 4.6, Eq. (6)",
                  mk2.rational_coeffs(), eq_display(6, p));
    if (p == 3) {
        // The p=3 instance must be decided by the tower: K(3) has the primed
        // primitive element, so its minimal polynomial is the Eq. (4) field.
        check_min_poly(rep, "family_p3_decided", "Thm 4.6 (K(3) = K'), Eq. (4) vs Eq. (5)", mk,
                       eq_display(4));
    }
}

void verify_theorem_4_8(VerificationReport& rep) {
    auto f2 = base_field(2);
    auto f4 = base_field(4);
    Poly f = parse_poly(f2, "T^8+T^6+T^5+T^3+1");

    // 1: irreducibility over F_2.
    rep.add("thm48_1_f_irreducible", "Thm 4.8 setup", is_irreducible(f), "irreducible", "computed");

    // 2: the two quartic factors over F_4, with the stated generator of p.
    Poly f4poly = Poly::zero(f4);
    {
        std::vector<FqElement> cs;
        for (int i = 0; i <= f.degree(); ++i) cs.push_back(f4->from_int(f.coeff(i).scalar_value()));
        f4poly = Poly(f4, cs);
    }
    Poly p_gen = parse_poly(f4, "T^4+z*T^2+(z+1)*T+(z+1)");
    Poly q_gen = parse_poly(f4, "T^4+(z+1)*T^2+z*T+z");
    {
        auto factors = factor(f4poly);
        bool ok = factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1;
        std::set<std::string> got, want{format_poly(p_gen), format_poly(q_gen)};
        for (auto& [g, m] : factors) {
            (void)m;
            got.insert(format_poly(g));
        }
        ok = ok && got == want;
        rep.add("thm48_2_quartic_factors", "Thm 4.8 setup", ok,
                format_poly(p_gen) + " ; " + format_poly(q_gen),
                factors.size() == 2 ? format_poly(factors[0].first) + " ; " + format_poly(factors[1].first)
                                    : "wrong factor count");
    }

    // Residue field k = F_2[T]/(f) with T the class of the variable.
    std::vector<uint8_t> mod;
    for (int i = 0; i <= f.degree(); ++i) mod.push_back(static_cast<uint8_t>(f.coeff(i).scalar_value()));
    auto k = FqField::make(2, mod);
    FqElement t = k->gen();
    auto at_t = [&](std::initializer_list<int> exps) {
        FqElement acc = k->zero();
        for (int e : exps) acc = acc + t.pow(e);
        return acc;
    };

    // 3: g = T^6+T^5+T^4+T^3+T^2+T is a primitive third root of unity in k.
    FqElement g = at_t({6, 5, 4, 3, 2, 1});
    bool g_ok = (g * g + g + k->one()).is_zero() && !g.is_one();
    rep.add("thm48_3_cube_root", "Thm 4.8 setup (g(T))", g_ok, "g^2+g+1 = 0, g != 1", "computed");

    // The generator of p as an ideal gcd: (f, g+z) in F_4[T].
    {
        // In F_4[T]: gcd(f, g(T) + z).
        Poly gz = parse_poly(f4, "T^6+T^5+T^4+T^3+T^2+T") + Poly::constant(f4->gen());
        Poly got = poly_gcd(f4poly, gz);
        rep.add("thm48_2b_p_generator", "Thm 4.8 setup (Euclidean division)", got == p_gen,
                format_poly(p_gen), format_poly(got));
    }

    // 4: the roots of X^2+X+zeta*T in k are T^7+T^5+T^4+T and its +1.
    FqElement c_f = g * t;  // the alpha-layer constant at this prime
    auto roots = artin_schreier_roots(c_f);
    FqElement r1 = at_t({7, 5, 4, 1});
    bool roots_ok = roots.size() == 2 &&
                    ((roots[0] == r1 && roots[1] == r1 + k->one()) ||
                     (roots[1] == r1 && roots[0] == r1 + k->one()));
    rep.add("thm48_4_alpha_roots", "Thm 4.8 proof (splitting in F)", roots_ok,
            "T^7+T^5+T^4+T and T^7+T^5+T^4+T+1", roots.size() == 2 ? "two roots computed" : "no roots");

    // 5, 6: both primes of F above p are inert in K.
    FqElement cK1 = (t * t + g * t) * r1;
    FqElement expected_cK1 = at_t({7, 5, 4, 3, 2, 1});
    bool inert1 = cK1 == expected_cK1 && artin_schreier_roots(cK1).empty();
    rep.add("thm48_5_p1_inert_in_K", "Thm 4.8 proof (X^2+X+T^7+T^5+T^4+T^3+T^2+T)", inert1,
            "constant T^7+T^5+T^4+T^3+T^2+T, no roots in k", inert1 ? "computed" : "mismatch");

    FqElement cK2 = (t * t + g * t) * (r1 + k->one());
    FqElement expected_cK2 = at_t({6, 2, 1});
    bool inert2 = cK2 == expected_cK2 && artin_schreier_roots(cK2).empty();
    rep.add("thm48_6_p2_inert_in_K", "Thm 4.8 proof (X^2+X+T^6+T^2+T)", inert2,
            "constant T^6+T^2+T, no roots in k", inert2 ? "computed" : "mismatch");

    // 7: both split in K' (add T^3).
    FqElement t3 = t.pow(3);
    bool split1 = !artin_schreier_roots(cK1 + t3).empty();
    bool split2 = !artin_schreier_roots(cK2 + t3).empty();
    rep.add("thm48_7_both_split_in_Kprime", "Thm 4.8 proof (adding T^3)", split1 && split2,
            "X^2+X+T^7+T^5+T^4+T^2+T and X^2+X+T^6+T^3+T^2+T split in k", "computed");

    // 8: the headline types, and q with the roles swapped.
    FieldDesc K4 = field_desc("paper:K", 4);
    FieldDesc K4p = field_desc("paper:Kprime", 4);
    auto pr_p = PrimeOfBase::make(4, p_gen);
    auto pr_q = PrimeOfBase::make(4, q_gen);
    SplittingType tK = splitting_type_tower(K4, pr_p);
    SplittingType tKp = splitting_type_tower(K4p, pr_p);
    SplittingType sK = splitting_type_tower(K4, pr_q);
    SplittingType sKp = splitting_type_tower(K4p, pr_q);
    rep.add("thm48_8_types_at_p_and_q", "Thm 4.8 (types (2,2) and (1,1,1,1)); q swapped",
            tK == SplittingType({2, 2}) && tKp == SplittingType({1, 1, 1, 1}) &&
                sK == SplittingType({1, 1, 1, 1}) && sKp == SplittingType({2, 2}),
            "K: (2,2)@p, (1,1,1,1)@q; K': (1,1,1,1)@p, (2,2)@q",
            "K: " + tK.str() + "@p, " + sK.str() + "@q; K': " + tKp.str() + "@p, " + sKp.str() + "@q");

    // 9: over F_2(T) the prime (f) has the combined type in both fields,
    // by the tower walk and by Dedekind reduction of Eqs. (3), (4).
    FieldDesc K2 = field_desc("paper:K", 2);
    FieldDesc K2p = field_desc("paper:Kprime", 2);
    auto pr_f = PrimeOfBase::make(2, f);
    SplittingType big({1, 1, 1, 1, 2, 2});
    SplittingType wK = splitting_type_tower(K2, pr_f);
    SplittingType wKp = splitting_type_tower(K2p, pr_f);
    auto eq3_coeffs = eq_display(3);
    auto eq4_coeffs = eq_display(4);
    std::vector<Poly> h3, h4;
    for (const auto& c : eq3_coeffs) h3.push_back(c.to_poly(f2));
    for (const auto& c : eq4_coeffs) h4.push_back(c.to_poly(f2));
    auto d3 = splitting_type_dedekind(h3, pr_f);
    auto d4 = splitting_type_dedekind(h4, pr_f);
    bool nine = wK == big && wKp == big && d3 && *d3 == big && d4 && *d4 == big;
    rep.add("thm48_9_combined_type", "Thm 4.8 conclusion ((1,1,1,1,2,2) in both)", nine, big.str(),
            "walk: " + wK.str() + " / " + wKp.str() + "; Dedekind: " + (d3 ? d3->str() : "inconclusive") +
                " / " + (d4 ? d4->str() : "inconclusive"));
}

void verify_group_theory(VerificationReport& rep) {
    auto model = build_8t15();
    rep.add("group_order", "Section 4 step 6 (degree 32 closure)", model.group->order() == 32, "32",
            std::to_string(model.group->order()));
    rep.add("group_section_order", "Section 4 step 7 (H of order 4)", model.section_h.order() == 4, "4",
            std::to_string(model.section_h.order()));
    bool a_cyc8 = model.a.order() == 8 && model.a.is_cyclic();
    rep.add("group_A_cyclic8", "Section 4 step 7 (A cyclic of order 8)", a_cyc8, "cyclic of order 8",
            a_cyc8 ? "computed" : "mismatch");

    // Twisted section elements (0,1),(4,3),(4,5),(0,7).
    std::vector<int> expect_tw{model.id_of(0, 1), model.id_of(4, 3), model.id_of(4, 5), model.id_of(0, 7)};
    std::sort(expect_tw.begin(), expect_tw.end());
    rep.add("group_twisted_section", "Section 4 step 8 (chi applied to the section)",
            model.twisted_h.elems == expect_tw, "{(0,1),(4,3),(4,5),(0,7)}", "computed");

    bool gassmann = is_gassmann_equivalent(model.section_h, model.twisted_h);
    bool conj = are_conjugate_subgroups(model.section_h, model.twisted_h);
    rep.add("group_gassmann_equivalent", "Section 4 step 8 (Gassmann equivalent)", gassmann, "true",
            gassmann ? "true" : "false");
    rep.add("group_not_conjugate", "Section 4 step 8 (not conjugated in G)", !conj, "false (not conjugate)",
            conj ? "true" : "false");

    // chi: cocycle by construction; not a coboundary; trivial on cyclic
    // subgroups with the stated witnesses.
    bool not_cob = !is_coboundary(model.chi, model.section_h, model.a);
    rep.add("group_chi_not_coboundary", "Section 4 step 8 (chi is not a 1-coboundary)", not_cob,
            "no phi_m works", not_cob ? "verified by exhausting A" : "found a coboundary witness");
    auto w1 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 1), model.a);
    auto w7 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 7), model.a);
    auto w3 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 3), model.a);
    auto w5 = restriction_coboundary_witnesses(model.chi, model.id_of(0, 5), model.a);
    auto contains = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    bool wit_ok = contains(w1, model.id_of(0, 1)) && contains(w7, model.id_of(0, 1)) &&
                  contains(w3, model.id_of(2, 1)) && contains(w5, model.id_of(3, 1));
    rep.add("group_chi_cyclic_witnesses", "Section 4 step 8 (phi_2 for psi_3, phi_3 for psi_5)", wit_ok,
            "id, id, phi_2, phi_3 witness the restrictions", wit_ok ? "computed" : "mismatch");

    // Exhaustive search over all maps H -> A finds chi among the qualifying
    // cocycles (non-trivial globally, trivial on every cyclic subgroup).
    auto found = cohomology_search(model.section_h, model.a);
    bool chi_found = false;
    for (const auto& c : found)
        if (c.h_elems == model.chi.h_elems && c.values == model.chi.values) chi_found = true;
    rep.add("group_cohomology_search", "Lemma 4.4 (non-trivial in H^1(H,A), trivial on cyclic)", chi_found,
            "search contains the displayed chi",
            "found " + std::to_string(found.size()) + " qualifying cocycles");

    // Tower side: the explicit automorphisms realize the abstract model.
    auto ctx = build_sibling_towers();
    auto id_images = [&]() {
        std::vector<TowerElement> v;
        for (int i = 0; i < ctx.N->count(); ++i) v.push_back(TowerElement::generator(ctx.N, i));
        return v;
    };
    TowerAut id(ctx.N, id_images(), "id");

    // phi1 orbit of beta: the eight displayed images with the resolved delta.
    TowerElement delta = ctx.delta ? TowerElement::one(ctx.N) : TowerElement::zero(ctx.N);
    TowerElement one = TowerElement::one(ctx.N);
    auto T1 = TowerElement::rational(ctx.N, F2Poly::t());
    std::vector<TowerElement> expected_orbit{
        ctx.beta + ctx.gamma + ctx.alpha + T1,
        ctx.beta + ctx.alpha + ctx.at + T1 + delta + one,
        ctx.beta + ctx.gamma + one + delta,
        ctx.beta + one,
        ctx.beta + ctx.gamma + ctx.alpha + T1 + one,
        ctx.beta + ctx.alpha + ctx.at + T1 + delta,
        ctx.beta + ctx.gamma + delta,
        ctx.beta};
    bool orbit_ok = true;
    {
        TowerElement y = ctx.beta;
        for (int m = 1; m <= 8; ++m) {
            y = ctx.phi1.apply(y);
            if (y != expected_orbit[m - 1]) orbit_ok = false;
        }
    }
    rep.add("tower_phi1_beta_orbit", "Section 4 step 7 (orbit of beta, cyclic of order 8)", orbit_ok,
            "the eight displayed images", orbit_ok ? "computed" : "mismatch");

    auto orbit_size = [&](const TowerAut& a, const TowerElement& x) {
        TowerElement y = x;
        for (int k = 1; k <= 16; ++k) {
            y = a.apply(y);
            if (y == x) return k;
        }
        return -1;
    };
    bool orders_ok = orbit_size(ctx.phi1, ctx.beta) == 8 && orbit_size(ctx.phi1, ctx.gamma) == 4 &&
                     orbit_size(ctx.phi1, ctx.alpha) == 4 && orbit_size(ctx.phi1, ctx.zeta) <= 2 &&
                     orbit_size(ctx.phi1, ctx.at) <= 2 && orbit_size(ctx.phi1, ctx.at3) <= 2;
    rep.add("tower_phi1_orbit_orders", "Section 4 step 7 (orbits of order 8/4/2)", orders_ok,
            "8 on beta, 4 on gamma and alpha, <=2 elsewhere", orders_ok ? "computed" : "mismatch");

    // psi_l phi_1 psi_l = phi_l.
    std::vector<TowerAut> phi_pow{id};
    for (int m = 1; m <= 8; ++m) phi_pow.push_back(ctx.phi1.compose(phi_pow.back()));
    bool rel_ok = ctx.psi3.compose(ctx.phi1).compose(ctx.psi3) == phi_pow[3] &&
                  ctx.psi5.compose(ctx.phi1).compose(ctx.psi5) == phi_pow[5] &&
                  ctx.psi7.compose(ctx.phi1).compose(ctx.psi7) == phi_pow[7];
    rep.add("tower_psi_phi_relation", "Section 4 step 7 (psi_l phi_1 psi_l = phi_l)", rel_ok,
            "relation holds for l = 3, 5, 7", rel_ok ? "computed" : "mismatch");

    // Bridge: (m, u) -> phi_1^m psi_u is an isomorphism onto the (m,u) model.
    // Compositions are compared through generator images to avoid rebuilding
    // substitution tables pair by pair.
    std::vector<TowerAut> auts;
    const TowerAut* psis[4] = {&id, &ctx.psi3, &ctx.psi5, &ctx.psi7};
    const int us[4] = {1, 3, 5, 7};
    for (int m = 0; m < 8; ++m)
        for (int ui = 0; ui < 4; ++ui) auts.push_back(phi_pow[m].compose(*psis[ui]));
    bool distinct = true;
    for (size_t i = 0; i < auts.size() && distinct; ++i)
        for (size_t j = i + 1; j < auts.size(); ++j)
            if (auts[i] == auts[j]) {
                distinct = false;
                break;
            }
    bool homo = true;
    const int ngen = ctx.N->count();
    for (size_t i = 0; i < auts.size() && homo; ++i) {
        for (size_t j = 0; j < auts.size() && homo; ++j) {
            int pid = model.group->mul(static_cast<int>(i), static_cast<int>(j));
            for (int g = 0; g < ngen; ++g) {
                if (auts[i].apply(auts[j].image(g)) != auts[pid].image(g)) {
                    homo = false;
                    break;
                }
            }
        }
    }
    rep.add("tower_group_bridge", "Section 4 step 7 (semidirect product structure)", distinct && homo,
            "32 distinct automorphisms composing like the (m,u) model",
            distinct ? (homo ? "verified on all 1024 pairs" : "composition mismatch") : "collision");

    // Fixed fields: the section fixes beta, the twisted section fixes
    // beta + at3.
    TowerElement bp = ctx.beta + ctx.at3;
    int fix_beta = 0, fix_bp = 0;
    bool twisted_fix = true;
    for (size_t i = 0; i < auts.size(); ++i) {
        if (auts[i].apply(ctx.beta) == ctx.beta) ++fix_beta;
        if (auts[i].apply(bp) == bp) ++fix_bp;
    }
    for (int ui = 0; ui < 4; ++ui) {
        int m = (us[ui] == 3 || us[ui] == 5) ? 4 : 0;
        if (auts[m * 4 + ui].apply(bp) != bp) twisted_fix = false;
    }
    rep.add("tower_fixed_groups", "Section 4 step 8 (beta+at3 fixed by the twisted section)",
            fix_beta == 4 && fix_bp == 4 && twisted_fix,
            "4 automorphisms fix beta; the 4 twisted ones fix beta+at3",
            "fix(beta)=" + std::to_string(fix_beta) + ", fix(beta+at3)=" + std::to_string(fix_bp));

    rep.add("tower_delta_resolved", "Section 4 step 7 (delta uniquely determined)",
            ctx.delta == 0 || ctx.delta == 1, "a single consistent bit",
            "delta=" + std::to_string(ctx.delta));

    // psi images of gamma match the displayed table with the same delta.
    bool psi_gamma = ctx.psi3.apply(ctx.gamma) == ctx.gamma + ctx.alpha + T1 + delta + one &&
                     ctx.psi5.apply(ctx.gamma) == ctx.gamma + one &&
                     ctx.psi7.apply(ctx.gamma) == ctx.gamma + ctx.alpha + T1 + delta;
    rep.add("tower_psi_gamma_table", "Section 4 step 8 (psi images of gamma, coherent delta)", psi_gamma,
            "psi_3, psi_5, psi_7 act as displayed", psi_gamma ? "computed" : "mismatch");
}

void verify_equivalence_and_zeta(const VerifyOptions& opt, VerificationReport& rep) {
    FieldDesc K2 = field_desc("paper:K", 2), Kp2 = field_desc("paper:Kprime", 2);
    FieldDesc K4 = field_desc("paper:K", 4), Kp4 = field_desc("paper:Kprime", 4);

    SweepReport s2 = equivalence_sweep(K2, Kp2, opt.max_deg);
    rep.add("sweep_K_Kprime_F2", "Thm 4.5 with Cor. (equivalent over F_2(T), no exceptions)",
            s2.mismatches.empty(),
            "0 unequal primes of degree <= " + std::to_string(opt.max_deg),
            std::to_string(s2.mismatches.size()) + " unequal of " + std::to_string(s2.primes_checked));

    SweepReport s4 = equivalence_sweep(K4, Kp4, opt.max_deg_f4);
    Poly p_gen = parse_poly(base_field(4), "T^4+z*T^2+(z+1)*T+(z+1)");
    bool witness = false;
    for (const auto& mm : s4.mismatches)
        if (mm.prime.gen == p_gen) witness = true;
    rep.add("sweep_K_Kprime_F4", "Thm 4.6 / Thm 4.8 (not equivalent over F_4(T))",
            !s4.mismatches.empty() && witness,
            ">= 1 unequal prime, including the degree-4 witness",
            std::to_string(s4.mismatches.size()) + " unequal of " + std::to_string(s4.primes_checked));

    // Family pair at this p.
    PaperPair pair = build_paper_pair(opt.p);
    SweepReport f2s = equivalence_sweep(pair.k, pair.kprime, opt.max_deg);
    rep.add("sweep_family_F2_p" + std::to_string(opt.p), "Thm 4.6 (K(p) ~ K'(p) over F_2(T))",
            f2s.mismatches.empty(), "0 unequal primes",
            std::to_string(f2s.mismatches.size()) + " unequal of " + std::to_string(f2s.primes_checked));
    FieldDesc k4 = field_desc(pair.k.name, 4), kp4 = field_desc(pair.kprime.name, 4);
    SweepReport f4s = equivalence_sweep(k4, kp4, opt.max_deg_f4);
    rep.add("sweep_family_F4_p" + std::to_string(opt.p), "Thm 4.6 (not equivalent over F_4(T))",
            !f4s.mismatches.empty(), ">= 1 unequal prime",
            std::to_string(f4s.mismatches.size()) + " unequal of " + std::to_string(f4s.primes_checked));

    if (opt.p == 2) {
        // K(2) and K are isomorphic fields, so every splitting type agrees.
        SweepReport iso = equivalence_sweep(pair.k, K2, opt.max_deg);
        SweepReport isop = equivalence_sweep(pair.kprime, Kp2, opt.max_deg);
        rep.add("family_p2_isomorphic_consistency", "Thm 4.6 (K(2) = K, K'(2) = K')",
                iso.mismatches.empty() && isop.mismatches.empty(), "0 unequal primes in both sweeps",
                std::to_string(iso.mismatches.size()) + " and " + std::to_string(isop.mismatches.size()));
    }
    if (opt.p == 3) {
        bool same_tower = pair.k.tower->compatible(*preset_tower("paper:Kprime")) &&
                          pair.kprime.tower->compatible(*preset_tower("paper:K"));
        rep.add("family_p3_identification", "Thm 4.6 (K(3) = K', K'(3) = K)", same_tower,
                "identical tower presentations", same_tower ? "identical" : "different");
    }
    if (opt.p >= 5) {
        for (int q : {5, 7}) {
            if (q == opt.p) continue;
            PaperPair other = build_paper_pair(q);
            SweepReport cross = equivalence_sweep(pair.k, other.k, opt.max_deg);
            rep.add("family_distinct_p" + std::to_string(opt.p) + "_q" + std::to_string(q),
                    "Thm 4.6 (K(p) not equivalent to K(q), p != q >= 5)", !cross.mismatches.empty(),
                    ">= 1 distinguishing prime of degree <= " + std::to_string(opt.max_deg),
                    std::to_string(cross.mismatches.size()) + " of " + std::to_string(cross.primes_checked));
        }
    }

    // Zeta tables.
    ZetaTable zk = zeta_table(K2, opt.zeta_deg, 2, opt.witt_len);
    ZetaTable zkp = zeta_table(Kp2, opt.zeta_deg, 2, opt.witt_len);
    rep.add("zeta_tables_equal", "Cor. 3.9 and final Cor. (same lifted coefficients B)",
            zeta_tables_equal(zk, zkp), "identical (f, A, B, Witt) rows up to degree " +
                std::to_string(opt.zeta_deg),
            zeta_tables_equal(zk, zkp) ? "identical" : "differ");
    bool mod_ok = true;
    for (const auto& row : zk.rows) {
        if (BigInt(row.a) != row.b % 2) mod_ok = false;
        if (row.witt.coords()[0] != row.a) mod_ok = false;
    }
    rep.add("zeta_mod_p_column", "Eq. (1) (A = B mod p; first Witt coordinate)", mod_ok,
            "A = B mod 2 and witt[0] = A in every row", mod_ok ? "holds" : "violated");

    ZetaTable fzk = zeta_table(pair.k, std::min(opt.zeta_deg, 4), 2, opt.witt_len);
    ZetaTable fzkp = zeta_table(pair.kprime, std::min(opt.zeta_deg, 4), 2, opt.witt_len);
    rep.add("zeta_tables_family_p" + std::to_string(opt.p), "final Cor. (same lifted zeta for K(p), K'(p))",
            zeta_tables_equal(fzk, fzkp), "identical tables", zeta_tables_equal(fzk, fzkp) ? "identical" : "differ");
}

namespace {

// Multiset count of ideals from abstract prime counts: the generating
// function coefficient, computed by direct enumeration (independent of the
// binomial formula).
BigInt multiset_count(const std::map<int, int>& counts, int m) {
    // Expand primes as a flat list of degrees.
    std::vector<int> degs;
    for (const auto& [d, c] : counts)
        for (int i = 0; i < c; ++i) degs.push_back(d);
    std::function<BigInt(size_t, int)> rec = [&](size_t idx, int rem) -> BigInt {
        if (rem == 0) return 1;
        if (idx == degs.size()) return 0;
        BigInt total = 0;
        for (int a = 0; a * degs[idx] <= rem; ++a) total += rec(idx + 1, rem - a * degs[idx]);
        return total;
    };
    return rec(0, m);
}

// The prime-power formula read with the index roles as printed (multiplicity
// tuple strictly increasing, degrees free).
BigInt b_formula_as_printed(const std::map<int, int>& counts, int m) {
    BigInt total = 0;
    std::function<void(int, int, BigInt)> rec = [&](int min_a, int rem, BigInt acc) {
        if (rem == 0) {
            total += acc;
            return;
        }
        for (int a = min_a; a <= rem; ++a) {
            for (int mi = 1; a * mi <= rem; ++mi) {
                int c = counts.count(mi) ? counts.at(mi) : 0;
                BigInt ways = 1;
                for (int i = 0; i < a; ++i) {
                    ways *= (BigInt(c) + a - 1 - i);
                    ways /= (i + 1);
                }
                if (ways == 0) continue;
                rec(a + 1, rem - a * mi, acc * ways);
            }
        }
    };
    rec(1, m, 1);
    return total;
}

}  // namespace

void verify_counting_and_series(const VerifyOptions& opt, VerificationReport& rep) {
    FieldDesc K = field_desc("paper:K", 2);
    FieldDesc Kp = field_desc("paper:Kprime", 2);
    FieldDesc F = field_desc("paper:F", 2);

    // Oracle equivalence: the recursion formula against brute-force multiset
    // enumeration, 20 primes, prime powers up to m = 4.
    bool oracle_ok = true;
    std::string first_bad;
    for (const FieldDesc* fld : {&K, &Kp, &F}) {
        int used = 0;
        for (int d = 1; d <= 6 && used < 20; ++d) {
            for (const auto& prime : primes_of_degree(2, d)) {
                if (used >= 20) break;
                ++used;
                SplittingType st = splitting_type(*fld, prime);
                auto counts = prime_power_counts(st, 4 * fld->degree());
                Poly power = Poly::one(prime.gen.field());
                for (int m = 1; m <= 4; ++m) {
                    power = power * prime.gen;
                    BigInt lhs = b_prime_power(counts, m);
                    BigInt rhs = brute_force_ideal_count(*fld, power);
                    if (lhs != rhs && first_bad.empty()) {
                        first_bad = fld->name + " at " + prime.str() + " m=" + std::to_string(m) + ": " +
                                    lhs.str() + " vs " + rhs.str();
                        oracle_ok = false;
                    }
                }
            }
        }
    }
    rep.add("prime_power_recursion_oracle", "Thm 3.10 proof (prime ideal counting relation)", oracle_ok,
            "formula equals brute-force enumeration (20 primes, m <= 4, K, K', F)",
            oracle_ok ? "equal everywhere" : first_bad);

    // Composite combination is multiplicative, not additive.
    IdealCountTable tab = ideal_count_table(K, 2, 2);
    auto f2 = base_field(2);
    Poly t = Poly::x(f2);
    Poly t1 = t + Poly::one(f2);
    BigInt bt = tab.row_of(t).b, bt1 = tab.row_of(t1).b, btt1 = tab.row_of(t * t1).b;
    BigInt brute = brute_force_ideal_count(K, t * t1);
    bool mult_ok = btt1 == bt * bt1 && btt1 == brute;
    rep.add("b_multiplicative_combination", "Thm 3.10 proof (combination over coprime prime powers)",
            mult_ok, "B(fg) = B(f)B(g) = brute-force count",
            "B(T)=" + bt.str() + " B(T+1)=" + bt1.str() + " B(T(T+1))=" + btt1.str() + " brute=" +
                brute.str());
    if (btt1 != bt + bt1) {
        rep.add_discrepancy("b_additive_wording", "Thm 3.10 proof (\"additive\" display B(f^m g^n))",
                            "B(f^m g^n) = B(f^m) + B(g^n) as printed",
                            "unique factorization forces the product; e.g. " + btt1.str() + " = " +
                                bt.str() + "*" + bt1.str() + " != " + BigInt(bt + bt1).str());
    }

    // The binomial display with the printed index roles over-counts.
    std::map<int, int> demo{{1, 2}};
    BigInt correct = b_prime_power(demo, 3);
    BigInt enumerated = multiset_count(demo, 3);
    BigInt printed = b_formula_as_printed(demo, 3);
    rep.add("prime_power_formula_demo", "Thm 3.10 proof (binomial sum)", correct == enumerated,
            "formula equals multiset enumeration (C(1)=2, m=3)", correct.str() + " vs " + enumerated.str());
    if (printed != correct) {
        rep.add_discrepancy("prime_power_formula_index_roles",
                            "Thm 3.10 proof (sum over 1 <= a_1 < ... < a_r)",
                            "as printed (multiplicities strictly increasing): " + printed.str(),
                            "distinct degrees m_1 < ... < m_r with free multiplicities: " + correct.str() +
                                " (matches enumeration)");
    }

    // Thm 2.1's printed Gassmann condition repeats Gal(N/K) on both sides.
    rep.add_discrepancy("gassmann_condition_typo", "Thm 2.1(2) (|C n Gal(N/K)| = |C n Gal(N/K)|)",
                        "right-hand side should read Gal(N/L)",
                        "implemented with H_L on the right; see the group suite");

    // Euler product windows.
    auto f2base = base_field(2);
    SPoint sT{LaurentSeries::pi_power(f2base, -1, opt.laurent_prec), std::vector<int>(8, 0)};
    FieldDesc rat = field_desc("rational", 2);
    EulerCheck ec1 = euler_product_check(rat, sT, 5);
    rep.add("euler_product_rational", "Section 3 remark (Euler product)", ec1.agree,
            "sum and product agree to the degree-5 window",
            ec1.agree ? "agree" : ec1.sum.str() + " vs " + ec1.product.str());
    EulerCheck ec2 = euler_product_check(K, sT, 4);
    rep.add("euler_product_K", "Section 3 remark (Euler product)", ec2.agree,
            "sum and product agree to the degree-4 window",
            ec2.agree ? "agree" : ec2.sum.str() + " vs " + ec2.product.str());
}

void verify_chebotarev(const VerifyOptions& opt, VerificationReport& rep) {
    auto model = build_8t15();
    auto dens = predicted_densities(model.section_h);

    FieldDesc K = field_desc("paper:K", 2);
    ChebotarevReport che = chebotarev_frequencies(K, opt.chebotarev_deg);
    double worst = 0.0;
    std::set<SplittingType> all_types;
    for (const auto& [t, d] : dens) all_types.insert(t);
    for (const auto& [t, c] : che.counts) all_types.insert(t);
    std::string detail;
    for (const auto& t : all_types) {
        double predicted = 0.0;
        auto it = dens.find(t);
        if (it != dens.end())
            predicted = static_cast<double>(it->second.first) / it->second.second;
        double seen = che.frequency(t);
        worst = std::max(worst, std::fabs(predicted - seen));
        detail += t.str() + ":" + std::to_string(seen).substr(0, 5) + "/" +
                  std::to_string(predicted).substr(0, 5) + " ";
    }
    rep.add("chebotarev_K", "Thm 2.1 proof (coset types are the splitting types)", worst <= 0.06,
            "every frequency within 0.06 of the coset-type density (deg <= " +
                std::to_string(opt.chebotarev_deg) + ")",
            "max deviation " + std::to_string(worst) + " over " + std::to_string(che.primes_total) +
                " primes; " + detail);

    // Refinement for the non-geometric closure: the Frobenius of a degree-n
    // prime induces the n-th power of the constant-field Frobenius, so odd-
    // and even-degree primes sample the two cosets of Gal(N/F_4(T)).  The
    // plain density average is only the Dirichlet-density limit; the count-
    // weighted mixture is what degree-bounded sampling estimates.
    {
        std::map<SplittingType, int> odd_types, even_types;
        for (int id = 0; id < model.group->order(); ++id) {
            auto [m, u] = model.mu_of(id);
            (void)u;
            auto t = coset_type(model.section_h, generated_subgroup(model.group, {id}));
            (m % 2 ? odd_types : even_types)[t] += 1;
        }
        int n_odd = 0, n_even = 0;
        for (int d = 1; d <= opt.chebotarev_deg; ++d) {
            int nd = static_cast<int>(primes_of_degree(2, d).size());
            (d % 2 ? n_odd : n_even) += nd;
        }
        double worst_w = 0.0;
        for (const auto& t : all_types) {
            double w_odd = odd_types.count(t) ? odd_types[t] / 16.0 : 0.0;
            double w_even = even_types.count(t) ? even_types[t] / 16.0 : 0.0;
            double predicted = (w_odd * n_odd + w_even * n_even) / (n_odd + n_even);
            worst_w = std::max(worst_w, std::fabs(predicted - che.frequency(t)));
        }
        rep.add("chebotarev_K_coset_weighted",
                "Thm 2.1 proof with the constant-field constraint on Frobenius", worst_w <= 0.03,
                "frequencies within 0.03 of the parity-weighted coset densities",
                "max deviation " + std::to_string(worst_w));
    }

    // Quadratic layer: half split, half inert.
    FieldDesc AT = field_desc("paper:AT", 2);
    ChebotarevReport c2 = chebotarev_frequencies(AT, 10);
    double split = c2.frequency(SplittingType({1, 1}));
    double inert = c2.frequency(SplittingType({2}));
    rep.add("chebotarev_quadratic", "Thm 2.1 proof (density of vanishing-trace constants)",
            std::fabs(split - 0.5) <= 0.05 && std::fabs(inert - 0.5) <= 0.05,
            "split and inert frequencies within 0.05 of 1/2",
            "split " + std::to_string(split) + ", inert " + std::to_string(inert));

    // Constant-field extension: parity decides exactly.
    FieldDesc F4T = field_desc("paper:F4T", 2);
    bool parity_ok = true;
    for (int d = 1; d <= 10 && parity_ok; ++d) {
        for (const auto& prime : primes_of_degree(2, d)) {
            SplittingType st = splitting_type(F4T, prime);
            SplittingType want = d % 2 == 0 ? SplittingType({1, 1}) : SplittingType({2});
            if (st != want) {
                parity_ok = false;
                break;
            }
        }
    }
    rep.add("constant_extension_parity", "Section 3 (norm over the constant field)", parity_ok,
            "(1,1) at even degrees, (2) at odd degrees, exactly",
            parity_ok ? "holds for all primes of degree <= 10" : "violated");
}

VerificationReport verify_paper(const VerifyOptions& opt) {
    VerificationReport rep;
    verify_defining_polynomials(opt.p, rep);
    verify_theorem_4_8(rep);
    verify_group_theory(rep);
    verify_equivalence_and_zeta(opt, rep);
    verify_counting_and_series(opt, rep);
    if (opt.run_chebotarev) verify_chebotarev(opt, rep);
    return rep;
}

}  // namespace ffeq
