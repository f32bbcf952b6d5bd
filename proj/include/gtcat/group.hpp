#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gtcat/errors.hpp"

namespace gtcat {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as an explicit Cayley table. Immutable after
/// construction; construction validates the full group axioms (Latin
/// square, associativity, identity, inverses).
class FiniteGroup {
public:
    /// table[i*n + j] = index of g_i * g_j. Throws DomainError on any
    /// axiom violation or when n exceeds the table-mode bound.
    static GroupPtr from_table(std::vector<std::string> labels,
                               std::vector<int> table);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    /// g x g^{-1}
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& table() const { return table_; }

    int element_order(int i) const;
    bool is_abelian() const;
    /// Index of the element with the given label, or -1.
    int index_of(const std::string& label) const;

    /// Hard cap for table mode; quadratic storage and cubic validation
    /// stay trivial below it.
    static constexpr int kTableBound = 2048;

private:
    FiniteGroup() = default;
    int n_ = 0;
    int identity_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

enum class PresetKind { Cyclic, Dihedral, Symmetric, Quaternion8, DirectProduct };

GroupPtr cyclic_group(int n, int order_bound = 10000);
GroupPtr dihedral_group(int n, int order_bound = 10000); // order 2n
GroupPtr symmetric_group(int n, int order_bound = 10000); // n <= 6
GroupPtr quaternion_group();                              // Q8
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        int order_bound = 10000);

/// A subgroup of a parent group: a sorted set of parent indices together
/// with the subgroup realized as a standalone group (same element order).
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);

    static Subgroup whole(GroupPtr g);
    static Subgroup trivial(GroupPtr g);
    static Subgroup closure(GroupPtr g, std::span<const int> gens);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(int parent_idx) const { return local_of_[parent_idx] >= 0; }
    /// local index of a parent element, -1 if absent
    int local_index(int parent_idx) const { return local_of_[parent_idx]; }
    int to_parent(int local) const { return elements_[local]; }
    /// The subgroup as its own FiniteGroup; element i corresponds to
    /// elements()[i] in the parent.
    const GroupPtr& group() const { return as_group_; }

    bool is_whole() const { return size() == parent_->order(); }
    bool is_normal() const;
    /// g S g^{-1}
    Subgroup conjugated(int g) const;
    Subgroup intersect(const Subgroup& other) const;
    bool same_elements(const Subgroup& other) const;

private:
    GroupPtr parent_;
    std::vector<int> elements_; // sorted parent indices
    std::vector<int> local_of_; // parent index -> local index or -1
    GroupPtr as_group_;
};

struct DoubleCoset {
    int rep = 0;                 // minimal element index in the orbit
    std::vector<int> elements;   // sorted
    Subgroup stabilizer;         // L^g = H `cap` g K g^{-1}
};

struct ConjugacyClass {
    int rep = 0;
    std::vector<int> elements;
    Subgroup centralizer;
};

/// All subgroups, each once, sorted by (order, element set).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int order_bound = 48);

/// Orbits of g under (h,k).g = h^{-1} g k. Representative = minimal index.
std::vector<DoubleCoset> double_cosets(const Subgroup& H, const Subgroup& K);

/// Conjugacy classes; the class of the identity comes first.
std::vector<ConjugacyClass> conjugacy_data(const GroupPtr& g);

Subgroup centralizer_of(const GroupPtr& g, int x);

/// true iff {h k : h in H, k in K} = G
bool product_is_whole(const Subgroup& H, const Subgroup& K);

/// Verified homomorphism G -> Q given as an index map.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> map; // size |G|

    GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> m);
    int operator()(int x) const { return map[x]; }
};

} // namespace gtcat
