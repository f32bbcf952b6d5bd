#pragma once

#include <cstdint>
#include <vector>

#include "gtcat/category.hpp"

namespace gtcat {

/// Data for the center Z(G, omega) of Coh(G, omega).
struct CenterSpec {
    GroupPtr G;
    Cochain omega;    // verified 3-cocycle on the whole group
    long long p = 0;  // characteristic: 0 or a prime
};

CenterSpec validate_center(GroupPtr G, Cochain omega, long long p = 0);

/// One block per conjugacy class: the twisted algebra of (G_C, omega_g).
struct CenterBlock {
    ConjugacyClass cls;
    Cochain cocycle; // omega_g restricted to the centralizer (verified cocycle)
    TwistedAlgebraReport report;
};

struct CenterResult {
    std::vector<CenterBlock> blocks;
    std::vector<SimpleObjectDescriptor> simples; // fpdim = |C| dim V
};

/// Blocks of Z(G, omega) at characteristic 0.
CenterResult center_blocks(const CenterSpec& spec, uint64_t seed = kDefaultSeed,
                           int threads = 1);

/// Simples with fpdim = |C| dim V; hard postcondition sum fpdim^2 = |G|^2.
CenterResult center_simples(const CenterSpec& spec, uint64_t seed = kDefaultSeed,
                            int threads = 1);

/// Dual of a center simple: class of g^{-1}, contragredient irrep.
SimpleObjectDescriptor center_simple_dual(const CenterSpec& spec,
                                          const CenterResult& res,
                                          const SimpleObjectDescriptor& s);

/// Projective covers at char p: pcover_fpdim = |C| dim P_{(G_C, omega_g)}(V).
CenterResult center_projectives(const CenterSpec& spec,
                                uint64_t seed = kDefaultSeed, int threads = 1);

struct CrossCheckBlockReport {
    int class_rep = 0;
    int double_coset_rep = 0;
    int simple_count_center = 0;
    int simple_count_double = 0;
    std::vector<long long> fpdims_center;
    std::vector<long long> fpdims_double;
    bool cocycles_pointwise_equal = false;
    bool cocycles_cohomologous = false;
};

struct CrossCheckReport {
    bool pass = false;
    int class_count = 0;
    int block_count_double = 0;
    std::vector<CrossCheckBlockReport> blocks;
};

/// Independent oracle: computes C(GxG, omega x omega^{-1}, diag(G), 1) with
/// the general double-coset machinery and matches blocks, simple counts and
/// FPdim multisets against the conjugacy-class route.
CrossCheckReport cross_check_via_double(const CenterSpec& spec,
                                        uint64_t seed = kDefaultSeed,
                                        int threads = 1);

} // namespace gtcat
