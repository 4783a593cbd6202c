#include "ffeq/gassmann.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ffeq {

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_)
        if (d <= 0) throw std::invalid_argument("inertia degrees must be positive");
    std::sort(degrees_.begin(), degrees_.end());
}

int SplittingType::sum() const {
    int s = 0;
    for (int d : degrees_) s += d;
    return s;
}

int SplittingType::count_of(int m) const {
    return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), m));
}

std::string SplittingType::str() const {
    std::string s = "(";
    for (size_t i = 0; i < degrees_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degrees_[i]);
    }
    return s + ")";
}

FiniteGroupPtr FiniteGroup::make(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n < 1 || n > 64) throw std::invalid_argument("group order must be in [1, 64]");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
    }
    auto g = FiniteGroupPtr(new FiniteGroup());
    auto* gm = const_cast<FiniteGroup*>(g.get());
    gm->table_ = std::move(table);
    gm->labels_ = std::move(labels);
    if (gm->labels_.empty()) {
        for (int i = 0; i < n; ++i) gm->labels_.push_back("e" + std::to_string(i));
    }
    // identity
    gm->id_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (gm->table_[e][x] != x || gm->table_[x][e] != x) {
                ok = false;
                break;
            }
        if (ok) {
            gm->id_ = e;
            break;
        }
    }
    if (gm->id_ < 0) throw std::invalid_argument("table has no identity");
    // inverses
    gm->inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (gm->table_[x][y] == gm->id_ && gm->table_[y][x] == gm->id_) {
                gm->inv_[x] = y;
                break;
            }
        if (gm->inv_[x] < 0) throw std::invalid_argument("element without inverse");
    }
    // associativity (exhaustive at these orders)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (gm->table_[gm->table_[x][y]][z] != gm->table_[x][gm->table_[y][z]])
                    throw std::invalid_argument("table is not associative");
    return g;
}

FiniteGroupPtr FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric group supported for n <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        for (int i = 0; i < m; ++i)
            if (perms[i] == q) return i;
        return -1;
    };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> q(n);
            for (int x = 0; x < n; ++x) q[x] = perms[i][perms[j][x]];
            table[i][j] = index_of(q);
        }
    return make(std::move(table));
}

int FiniteGroup::element_order(int a) const {
    int x = a, ord = 1;
    while (x != id_) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    const int n = order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int g = 0; g < n; ++g) cls.insert(conj(x, g));
        std::vector<int> v(cls.begin(), cls.end());
        for (int y : v) seen[y] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

Subgroup::Subgroup(FiniteGroupPtr g, std::vector<int> ids) : group(std::move(g)), elems(std::move(ids)) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!contains(group->identity())) throw std::invalid_argument("subgroup must contain the identity");
    for (int x : elems) {
        if (!contains(group->inverse(x))) throw std::invalid_argument("subgroup not closed under inverse");
        for (int y : elems)
            if (!contains(group->mul(x, y))) throw std::invalid_argument("subgroup not closed under product");
    }
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

bool Subgroup::is_cyclic() const {
    for (int x : elems)
        if (group->element_order(x) == order()) return true;
    return false;
}

Subgroup generated_subgroup(const FiniteGroupPtr& g, const std::vector<int>& gens) {
    std::set<int> s{g->identity()};
    std::vector<int> frontier{g->identity()};
    for (int x : gens)
        if (!s.count(x)) {
            s.insert(x);
            frontier.push_back(x);
        }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : std::vector<int>(s.begin(), s.end())) {
                for (int z : {g->mul(x, y), g->mul(y, x), g->inverse(x)}) {
                    if (!s.count(z)) {
                        s.insert(z);
                        next.push_back(z);
                    }
                }
            }
        frontier = std::move(next);
    }
    return Subgroup(g, std::vector<int>(s.begin(), s.end()));
}

std::vector<Subgroup> all_subgroups(const FiniteGroupPtr& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    const int n = g->order();
    auto add = [&](const Subgroup& h) {
        if (seen.insert(h.elems).second) out.push_back(h);
    };
    add(generated_subgroup(g, {}));
    for (int a = 0; a < n; ++a) add(generated_subgroup(g, {a}));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) add(generated_subgroup(g, {a, b}));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) add(generated_subgroup(g, {a, b, c}));
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elems < y.elems;
    });
    return out;
}

bool is_gassmann_equivalent(const Subgroup& h1, const Subgroup& h2) {
    if (h1.group != h2.group) throw std::invalid_argument("subgroups of different groups");
    for (const auto& cls : h1.group->conjugacy_classes()) {
        int c1 = 0, c2 = 0;
        for (int x : cls) {
            c1 += h1.contains(x);
            c2 += h2.contains(x);
        }
        if (c1 != c2) return false;
    }
    return true;
}

bool are_conjugate_subgroups(const Subgroup& h1, const Subgroup& h2) {
    if (h1.group != h2.group) throw std::invalid_argument("subgroups of different groups");
    if (h1.order() != h2.order()) return false;
    const auto& g = h1.group;
    for (int t = 0; t < g->order(); ++t) {
        std::vector<int> image;
        image.reserve(h1.order());
        for (int x : h1.elems) image.push_back(g->conj(x, t));
        std::sort(image.begin(), image.end());
        if (image == h2.elems) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> class_intersections(const Subgroup& h1, const Subgroup& h2) {
    std::vector<std::pair<int, int>> out;
    for (const auto& cls : h1.group->conjugacy_classes()) {
        int c1 = 0, c2 = 0;
        for (int x : cls) {
            c1 += h1.contains(x);
            c2 += h2.contains(x);
        }
        out.emplace_back(c1, c2);
    }
    return out;
}

SplittingType coset_type(const Subgroup& h, const Subgroup& c) {
    if (h.group != c.group) throw std::invalid_argument("subgroups of different groups");
    if (!c.is_cyclic()) throw std::invalid_argument("coset type requires a cyclic subgroup");
    const auto& g = h.group;
    std::vector<bool> seen(g->order(), false);
    std::vector<int> fs;
    for (int t = 0; t < g->order(); ++t) {
        if (seen[t]) continue;
        std::set<int> dc;
        for (int x : h.elems)
            for (int y : c.elems) dc.insert(g->mul(g->mul(x, t), y));
        for (int z : dc) seen[z] = true;
        if (static_cast<int>(dc.size()) % h.order() != 0)
            throw std::runtime_error("double coset size not divisible by |H|");
        fs.push_back(static_cast<int>(dc.size()) / h.order());
    }
    return SplittingType(fs);
}

std::map<SplittingType, std::pair<int, int>> predicted_densities(const Subgroup& h) {
    const auto& g = h.group;
    std::map<SplittingType, int> counts;
    for (int x = 0; x < g->order(); ++x) {
        Subgroup cyc = generated_subgroup(g, {x});
        counts[coset_type(h, cyc)] += 1;
    }
    std::map<SplittingType, std::pair<int, int>> out;
    for (auto& [t, c] : counts) out[t] = {c, g->order()};
    return out;
}

Cocycle::Cocycle(FiniteGroupPtr g, std::vector<int> h, std::vector<int> vals)
    : group(std::move(g)), h_elems(std::move(h)), values(std::move(vals)) {
    if (h_elems.size() != values.size()) throw std::invalid_argument("value per H element required");
    // chi(s t) = chi(s)^t * chi(t)
    for (size_t i = 0; i < h_elems.size(); ++i)
        for (size_t j = 0; j < h_elems.size(); ++j) {
            int st = group->mul(h_elems[i], h_elems[j]);
            int expected = group->mul(group->conj(values[i], h_elems[j]), values[j]);
            if (value_of(st) != expected) throw std::invalid_argument("not a 1-cocycle");
        }
}

int Cocycle::value_of(int h) const {
    for (size_t i = 0; i < h_elems.size(); ++i)
        if (h_elems[i] == h) return values[i];
    throw std::invalid_argument("element outside the cocycle domain");
}

int Model8T15::id_of(int m, int u) const {
    m = ((m % 8) + 8) % 8;
    static const int uindex[8] = {-1, 0, -1, 1, -1, 2, -1, 3};
    if (u < 1 || u > 7 || uindex[u] < 0) throw std::invalid_argument("u must be odd mod 8");
    return m * 4 + uindex[u];
}

std::pair<int, int> Model8T15::mu_of(int id) const {
    static const int us[4] = {1, 3, 5, 7};
    return {id / 4, us[id % 4]};
}

Model8T15 build_8t15() {
    static const int us[4] = {1, 3, 5, 7};
    std::vector<std::vector<int>> table(32, std::vector<int>(32));
    std::vector<std::string> labels(32);
    auto id_of = [&](int m, int u) {
        int ui = (u == 1) ? 0 : (u == 3) ? 1 : (u == 5) ? 2 : 3;
        return ((m % 8) + 8) % 8 * 4 + ui;
    };
    for (int m = 0; m < 8; ++m)
        for (int ui = 0; ui < 4; ++ui)
            labels[m * 4 + ui] = "(" + std::to_string(m) + "," + std::to_string(us[ui]) + ")";
    for (int m = 0; m < 8; ++m)
        for (int ui = 0; ui < 4; ++ui)
            for (int m2 = 0; m2 < 8; ++m2)
                for (int ui2 = 0; ui2 < 4; ++ui2)
                    table[m * 4 + ui][m2 * 4 + ui2] = id_of(m + us[ui] * m2, us[ui] * us[ui2] % 8);
    auto g = FiniteGroup::make(std::move(table), std::move(labels));

    std::vector<int> a_ids, h_ids, tw_ids;
    for (int m = 0; m < 8; ++m) a_ids.push_back(id_of(m, 1));
    for (int u : us) h_ids.push_back(id_of(0, u));
    // chi(psi_1)=chi(psi_7)=id, chi(psi_3)=chi(psi_5)=phi_4; twisted section
    // multiplies the section by the cocycle value.
    std::vector<int> chi_vals;
    std::vector<int> chi_dom;
    for (int u : us) {
        chi_dom.push_back(id_of(0, u));
        chi_vals.push_back((u == 3 || u == 5) ? id_of(4, 1) : id_of(0, 1));
    }
    for (int u : us) tw_ids.push_back(g->mul((u == 3 || u == 5) ? id_of(4, 1) : id_of(0, 1), id_of(0, u)));

    Model8T15 model{g,
                    Subgroup(g, a_ids),
                    Subgroup(g, h_ids),
                    Subgroup(g, tw_ids),
                    Cocycle(g, chi_dom, chi_vals)};
    return model;
}

std::vector<Cocycle> cohomology_search(const Subgroup& h, const Subgroup& a, uint64_t bound) {
    const auto& g = h.group;
    const uint64_t na = a.order(), nh = h.order();
    uint64_t total = 1;
    for (uint64_t i = 0; i < nh; ++i) {
        total *= na;
        if (total > bound) throw std::invalid_argument("cohomology search space exceeds the bound");
    }
    // A must be abelian for H^1 to make sense here.
    for (int x : a.elems)
        for (int y : a.elems)
            if (g->mul(x, y) != g->mul(y, x)) throw std::invalid_argument("A must be abelian");

    std::vector<Cocycle> found;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        std::vector<int> vals(nh);
        for (size_t i = 0; i < nh; ++i) {
            vals[i] = a.elems[c % na];
            c /= na;
        }
        // cocycle identity
        bool ok = true;
        auto value_of = [&](int x) {
            for (size_t i = 0; i < nh; ++i)
                if (h.elems[i] == x) return vals[i];
            return -1;
        };
        for (size_t i = 0; i < nh && ok; ++i)
            for (size_t j = 0; j < nh && ok; ++j) {
                int st = g->mul(h.elems[i], h.elems[j]);
                int expected = g->mul(g->conj(vals[i], h.elems[j]), vals[j]);
                if (value_of(st) != expected) ok = false;
            }
        if (!ok) continue;
        Cocycle chi(g, h.elems, vals);
        if (is_coboundary(chi, h, a)) continue;
        bool cyclically_trivial = true;
        for (int x : h.elems)
            if (restriction_coboundary_witnesses(chi, x, a).empty()) {
                cyclically_trivial = false;
                break;
            }
        if (cyclically_trivial) found.push_back(std::move(chi));
    }
    return found;
}

bool is_coboundary(const Cocycle& chi, const Subgroup& h, const Subgroup& a) {
    const auto& g = h.group;
    for (int cand : a.elems) {
        bool ok = true;
        for (size_t i = 0; i < h.elems.size(); ++i) {
            int expected = g->mul(g->conj(cand, h.elems[i]), g->inverse(cand));
            if (chi.values[i] != expected) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<int> restriction_coboundary_witnesses(const Cocycle& chi, int h0, const Subgroup& a) {
    const auto& g = chi.group;
    // Elements of <h0>.
    std::vector<int> cyc{g->identity()};
    int x = h0;
    while (x != g->identity()) {
        cyc.push_back(x);
        x = g->mul(x, h0);
    }
    std::vector<int> witnesses;
    for (int cand : a.elems) {
        bool ok = true;
        for (int y : cyc) {
            int expected = g->mul(g->conj(cand, y), g->inverse(cand));
            if (chi.value_of(y) != expected) {
                ok = false;
                break;
            }
        }
        if (ok) witnesses.push_back(cand);
    }
    return witnesses;
}

}  // namespace ffeq
