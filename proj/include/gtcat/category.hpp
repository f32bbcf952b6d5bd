#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"
#include "gtcat/projrep.hpp"

namespace gtcat {

/// Validated data (G, omega, H, psi) with omega a 3-cocycle and
/// d psi = omega|_H.
struct CategorySpec {
    GroupPtr G;
    Cochain omega; // degree 3 on the whole group
    Subgroup H;
    Cochain psi;   // degree 2 on H
};

/// The module-category datum (K, eta) over a CategorySpec; d eta = omega|_K.
struct ModuleCatSpec {
    CategorySpec base;
    Subgroup K;
    Cochain eta;
};

struct SimpleObjectDescriptor {
    int block = 0;              // index into the block list
    int coset_rep = 0;          // canonical double-coset representative g
    int irrep_index = 0;        // into the block's TwistedAlgebraReport
    int dim = 0;                // dim V
    long long fpdim = 0;        // scaled dimension
    long long pcover_fpdim = 0; // = fpdim unless computed in char p
};

struct BlockInfo {
    DoubleCoset coset;
    Cochain xi;                 // xi_g on L^g (exponents of the +xi cocycle)
    TwistedAlgebraReport report; // of (L^g, xi_g^{-1})
};

struct SimplesResult {
    std::vector<BlockInfo> blocks;
    std::vector<SimpleObjectDescriptor> simples;
};

/// Throws DomainError naming a witness tuple when validation fails.
CategorySpec validate_category(GroupPtr G, Cochain omega, Subgroup H, Cochain psi);
ModuleCatSpec validate_module_cat(CategorySpec base, Subgroup K, Cochain eta);

/// Simples of M((H,psi),(K,eta)): one block per (H,K) double coset, one
/// simple per irreducible of (L^g, xi_g^{-1}); fpdim = (|K|/|L^g|) dim V.
SimplesResult module_cat_simples(const ModuleCatSpec& spec,
                                 uint64_t seed = kDefaultSeed,
                                 int threads = 1);

/// Simples of C(G,omega,H,psi) = module_cat_simples with (K,eta) = (H,psi);
/// fpdim = (|H|/|L^g|) dim V; hard postcondition sum fpdim^2 = |G|.
SimplesResult category_simples(const CategorySpec& spec,
                               uint64_t seed = kDefaultSeed, int threads = 1);

/// The dual simple: block of Z^{-1}, contragredient irrep transported along
/// the canonical conjugation isomorphism and normalized to xi_{g'}^{-1}.
SimpleObjectDescriptor simple_dual(const CategorySpec& spec,
                                   const SimplesResult& res,
                                   const SimpleObjectDescriptor& s,
                                   uint64_t seed = kDefaultSeed);

/// Per-simple projective cover dimensions at characteristic p (p = 0 gives
/// pcover = simple). In char p the per-block simples are the modular ones.
SimplesResult projective_cover_data(const CategorySpec& spec, long long p,
                                    uint64_t seed = kDefaultSeed,
                                    int threads = 1);

struct PairWitness {
    bool equivalent = false;
    int g = -1;                    // conjugator with H' = g^{-1} H g
    std::optional<Cochain> witness; // 1-cochain with d mu = psi' - psi_g
};

/// Definition-level pair equivalence: exists g with H' = g^{-1} H g and
/// (psi')^{-1} psi_g trivial in H^2(H', G_m).
PairWitness pair_equivalent(const GroupPtr& G, const Cochain& omega,
                            const Subgroup& H, const Cochain& psi,
                            const Subgroup& H2, const Cochain& psi2);

/// Inequivalent pairs (H, psi) with d psi = omega|_H: the module categories
/// of Coh(G, omega). Canonical representatives, deterministic order.
std::vector<std::pair<Subgroup, Cochain>> enumerate_module_categories(
    const GroupPtr& G, const Cochain& omega, int subgroup_bound = 48);

/// Fiber functors on C(G,omega,H,psi): pairs (K,eta) with d eta = omega|_K,
/// HK = G, and xi_1^{-1} nondegenerate on H `cap` K; deduplicated by pair
/// equivalence; each verified to give module-category rank 1.
std::vector<std::pair<Subgroup, Cochain>> fiber_functors(
    const CategorySpec& spec, uint64_t seed = kDefaultSeed,
    int subgroup_bound = 48);

struct UnimodularityReport {
    bool consistent = false;
    long long unit_pcover = 0;
    long long dual_pcover = 0;
    int unit_block = 0;
};

/// Necessary unimodularity condition at char p: the projective cover
/// dimension of the unit simple equals that of its dual.
UnimodularityReport unimodularity_probe(const CategorySpec& spec, long long p,
                                        uint64_t seed = kDefaultSeed);

/// Derive a deterministic per-block seed.
uint64_t block_seed(uint64_t seed, int block_rep);

} // namespace gtcat
