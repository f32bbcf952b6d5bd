#include "gtcat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gtcat {

GroupPtr FiniteGroup::from_table(std::vector<std::string> labels,
                                 std::vector<int> table) {
    const int n = static_cast<int>(labels.size());
    require(n >= 1, "group order must be positive");
    require(n <= kTableBound, "group order exceeds table-mode bound");
    require(table.size() == static_cast<size_t>(n) * n, "Cayley table has wrong shape");
    for (int v : table)
        require(v >= 0 && v < n, "Cayley table entry out of range");

    auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };

    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (row[at(a, b)]++) throw DomainError("Cayley table row is not a permutation");
            if (col[at(b, a)]++) throw DomainError("Cayley table column is not a permutation");
        }
    }

    // identity
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = at(i, j) == j && at(j, i) == j;
        if (ok) { e = i; break; }
    }
    require(e >= 0, "no identity element");

    // associativity, all triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = at(a, b);
            for (int c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c)))
                    throw DomainError("Cayley table is not associative");
        }

    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at(a, b) == e) { inverse[a] = b; break; }
    for (int a = 0; a < n; ++a)
        require(inverse[a] >= 0, "missing inverse");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = n;
    g->identity_ = e;
    g->labels_ = std::move(labels);
    g->table_ = std::move(table);
    g->inverse_ = std::move(inverse);
    return g;
}

int FiniteGroup::element_order(int i) const {
    int x = i, k = 1;
    while (x != identity_) { x = mul(x, i); ++k; }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

// ---------------------------------------------------------------- presets

GroupPtr cyclic_group(int n, int order_bound) {
    require(n >= 1, "cyclic: n must be >= 1");
    require(n <= order_bound, "cyclic: order exceeds bound");
    std::vector<std::string> labels(n);
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

GroupPtr dihedral_group(int n, int order_bound) {
    require(n >= 1, "dihedral: n must be >= 1");
    require(2 * n <= order_bound, "dihedral: order exceeds bound");
    const int N = 2 * n;
    // element a + n*b  <->  r^a s^b
    auto idx = [&](int a, int b) { return a + n * b; };
    std::vector<std::string> labels(N);
    for (int a = 0; a < n; ++a) {
        labels[idx(a, 0)] = a == 0 ? "e" : (a == 1 ? "r" : "r" + std::to_string(a));
        labels[idx(a, 1)] = a == 0 ? "s" : "sr" + std::to_string(a);
    }
    std::vector<int> table(static_cast<size_t>(N) * N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    // r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b+d}
                    int a2 = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    table[static_cast<size_t>(idx(a, b)) * N + idx(c, d)] =
                        idx(a2, (b + d) % 2);
                }
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

namespace {

std::string cycle_label(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += '(';
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            out += std::to_string(j + 1);
            j = perm[j];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

} // namespace

GroupPtr symmetric_group(int n, int order_bound) {
    require(n >= 1 && n <= 6, "symmetric: n must be in 1..6");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const int N = static_cast<int>(perms.size());
    require(N <= order_bound, "symmetric: order exceeds bound");

    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < N; ++i) idx[perms[i]] = i;

    std::vector<std::string> labels(N);
    std::vector<int> table(static_cast<size_t>(N) * N);
    for (int i = 0; i < N; ++i) labels[i] = cycle_label(perms[i]);
    std::vector<int> comp(n);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            table[static_cast<size_t>(a) * N + b] = idx.at(comp);
        }
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

GroupPtr quaternion_group() {
    // 1, -1, i, -i, j, -j, k, -k
    const std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto neg = [](int x) { return x ^ 1; };
    // multiplication on {1, i, j, k} with signs
    auto mulq = [&](int a, int b) {
        int sa = a & 1, sb = b & 1, ua = a >> 1, ub = b >> 1; // units 0=1,1=i,2=j,3=k
        static const int unit[4][4] = {
            {0, 1, 2, 3},
            {1, 0, 3, 2},
            {2, 3, 0, 1},
            {3, 2, 1, 0},
        };
        static const int sign[4][4] = {
            {0, 0, 0, 0},
            {0, 1, 0, 1},
            {0, 1, 1, 0},
            {0, 0, 1, 1},
        };
        int u = unit[ua][ub];
        int s = (sa + sb + sign[ua][ub]) % 2;
        return (u << 1) | s;
    };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[static_cast<size_t>(a) * 8 + b] = mulq(a, b);
    (void)neg;
    return FiniteGroup::from_table(labels, std::move(table));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, int order_bound) {
    const int na = a->order(), nb = b->order();
    require(static_cast<long long>(na) * nb <= order_bound,
            "direct product: order exceeds bound");
    const int N = na * nb;
    std::vector<std::string> labels(N);
    std::vector<int> table(static_cast<size_t>(N) * N);
    auto idx = [&](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            labels[idx(x, y)] = "(" + a->label(x) + "," + b->label(y) + ")";
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    table[static_cast<size_t>(idx(x1, y1)) * N + idx(x2, y2)] =
                        idx(a->mul(x1, x2), b->mul(y1, y2));
    return FiniteGroup::from_table(std::move(labels), std::move(table));
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    require(parent_ != nullptr, "subgroup: null parent");
    const int n = parent_->order();
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    require(!elements_.empty(), "subgroup: empty element set");
    for (int x : elements_)
        require(x >= 0 && x < n, "subgroup: element index out of range");

    local_of_.assign(n, -1);
    for (int i = 0; i < size(); ++i) local_of_[elements_[i]] = i;

    require(contains(parent_->identity()), "subgroup: identity missing");
    for (int x : elements_) {
        require(contains(parent_->inv(x)), "subgroup: not closed under inverse");
        for (int y : elements_)
            require(contains(parent_->mul(x, y)), "subgroup: not closed under multiplication");
    }
    require(parent_->order() % size() == 0, "subgroup: size does not divide group order");

    // realize as standalone group
    const int s = size();
    std::vector<std::string> labels(s);
    std::vector<int> table(static_cast<size_t>(s) * s);
    for (int i = 0; i < s; ++i) labels[i] = parent_->label(elements_[i]);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            table[static_cast<size_t>(i) * s + j] =
                local_of_[parent_->mul(elements_[i], elements_[j])];
    as_group_ = FiniteGroup::from_table(std::move(labels), std::move(table));
}

Subgroup Subgroup::whole(GroupPtr g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) {
    std::vector<int> e = {g->identity()};
    return Subgroup(std::move(g), std::move(e));
}

Subgroup Subgroup::closure(GroupPtr g, std::span<const int> gens) {
    const int n = g->order();
    for (int x : gens) require(x >= 0 && x < n, "closure: generator index out of range");
    std::vector<char> in(n, 0);
    std::vector<int> stack = {g->identity()};
    in[g->identity()] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : gens) {
            for (int y : {g->mul(x, h), g->mul(h, x)}) {
                if (!in[y]) { in[y] = 1; stack.push_back(y); }
            }
        }
    }
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
        if (in[i]) elems.push_back(i);
    return Subgroup(std::move(g), std::move(elems));
}

bool Subgroup::is_normal() const {
    for (int g = 0; g < parent_->order(); ++g)
        for (int x : elements_)
            if (!contains(parent_->conj(g, x))) return false;
    return true;
}

Subgroup Subgroup::conjugated(int g) const {
    std::vector<int> elems;
    elems.reserve(elements_.size());
    for (int x : elements_) elems.push_back(parent_->conj(g, x));
    return Subgroup(parent_, std::move(elems));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
    require(parent_ == other.parent_, "intersect: different parent groups");
    std::vector<int> elems;
    for (int x : elements_)
        if (other.contains(x)) elems.push_back(x);
    return Subgroup(parent_, std::move(elems));
}

bool Subgroup::same_elements(const Subgroup& other) const {
    if (elements_ != other.elements_) return false;
    return parent_ == other.parent_ || parent_->table() == other.parent_->table();
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int order_bound) {
    require(g->order() <= order_bound,
            "subgroup enumeration too large (order " + std::to_string(g->order()) +
                " exceeds bound " + std::to_string(order_bound) + ")");
    const int n = g->order();
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<std::vector<int>> frontier;

    auto add = [&](Subgroup s) {
        if (seen.insert(s.elements()).second) {
            frontier.push_back(s.elements());
            out.push_back(std::move(s));
        }
    };
    add(Subgroup::trivial(g));
    for (size_t i = 0; i < frontier.size(); ++i) {
        const std::vector<int> base = frontier[i];
        for (int x = 0; x < n; ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<int> gens = base;
            gens.push_back(x);
            add(Subgroup::closure(g, gens));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& H, const Subgroup& K) {
    require(H.parent() == K.parent(), "double cosets: mismatched parent group");
    const GroupPtr& g = H.parent();
    const int n = g->order();
    std::vector<char> done(n, 0);
    std::vector<DoubleCoset> out;
    long long total = 0;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::set<int> orbit;
        for (int h : H.elements())
            for (int k : K.elements())
                orbit.insert(g->mul(g->mul(g->inv(h), x), k));
        std::vector<int> elems(orbit.begin(), orbit.end());
        for (int y : elems) done[y] = 1;

        const int rep = elems.front();
        // L^g = H `cap` g K g^{-1}
        std::vector<int> stab;
        for (int h : H.elements())
            if (K.contains(g->conj(g->inv(rep), h))) stab.push_back(h);
        DoubleCoset dc{rep, std::move(elems), Subgroup(g, std::move(stab))};

        // orbit-stabilizer: |Z| |L^g| = |H| |K|
        ensure(static_cast<long long>(dc.elements.size()) * dc.stabilizer.size() ==
                   static_cast<long long>(H.size()) * K.size(),
               "double coset size violates orbit-stabilizer");
        total += static_cast<long long>(dc.elements.size());
        out.push_back(std::move(dc));
    }
    ensure(total == n, "double cosets do not partition the group");
    return out;
}

Subgroup centralizer_of(const GroupPtr& g, int x) {
    std::vector<int> elems;
    for (int y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) elems.push_back(y);
    return Subgroup(g, std::move(elems));
}

std::vector<ConjugacyClass> conjugacy_data(const GroupPtr& g) {
    const int n = g->order();
    std::vector<char> done(n, 0);
    std::vector<ConjugacyClass> out;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::set<int> orbit;
        for (int y = 0; y < n; ++y) orbit.insert(g->conj(y, x));
        std::vector<int> elems(orbit.begin(), orbit.end());
        for (int y : elems) done[y] = 1;
        const int rep = elems.front();
        ConjugacyClass c{rep, std::move(elems), centralizer_of(g, rep)};
        ensure(static_cast<long long>(c.elements.size()) * c.centralizer.size() == n,
               "conjugacy class size violates orbit-stabilizer");
        out.push_back(std::move(c));
    }
    // identity class first, the rest by representative
    std::stable_sort(out.begin(), out.end(),
                     [&](const ConjugacyClass& a, const ConjugacyClass& b) {
                         const bool ae = a.elements.size() == 1 && a.rep == g->identity();
                         const bool be = b.elements.size() == 1 && b.rep == g->identity();
                         if (ae != be) return ae;
                         return a.rep < b.rep;
                     });
    return out;
}

bool product_is_whole(const Subgroup& H, const Subgroup& K) {
    require(H.parent() == K.parent(), "product_is_whole: mismatched parent group");
    const GroupPtr& g = H.parent();
    std::vector<char> hit(g->order(), 0);
    int count = 0;
    for (int h : H.elements())
        for (int k : K.elements()) {
            int x = g->mul(h, k);
            if (!hit[x]) { hit[x] = 1; ++count; }
        }
    return count == g->order();
}

GroupHom::GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    require(map.size() == static_cast<size_t>(source->order()), "hom: wrong map size");
    for (int v : map)
        require(v >= 0 && v < target->order(), "hom: image out of range");
    for (int a = 0; a < source->order(); ++a)
        for (int b = 0; b < source->order(); ++b)
            require(map[source->mul(a, b)] == target->mul(map[a], map[b]),
                    "hom: not a homomorphism");
}

} // namespace gtcat
