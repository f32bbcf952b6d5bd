#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

namespace gtcat {

inline constexpr uint64_t kDefaultSeed = 0xC0FFEE;

struct ComplexMode {
    double tol = 1e-9;
};

struct FiniteFieldMode {
    long long p = 2;
    int e = 0; // 0 = smallest extension embedding the cocycle values
};

using ScalarMode = std::variant<ComplexMode, FiniteFieldMode>;

/// The twisted group algebra k_xi[L]: basis u_x, u_x u_y = zeta^xi(x,y) u_{xy}.
/// L is an abstract group (use Subgroup::group() to detach a subgroup) and xi
/// a verified 2-cocycle on the whole of L.
class TwistedAlgebra {
public:
    TwistedAlgebra(GroupPtr L, Cochain xi, ScalarMode mode);

    const GroupPtr& group() const { return L_; }
    const Cochain& cocycle() const { return xi_; }
    const ScalarMode& mode() const { return mode_; }

private:
    GroupPtr L_;
    Cochain xi_;
    ScalarMode mode_;
};

struct IrrepRecord {
    int dimension = 0;
    int index = 0;
    /// per-element matrices, rho(x) rho(y) = zeta^xi(x,y) rho(xy); complex
    /// mode only
    std::vector<Eigen::MatrixXcd> matrices;
    std::vector<std::complex<double>> character;
};

struct TwistedAlgebraReport {
    std::vector<IrrepRecord> irreps; // full data in complex mode
    std::vector<int> dims;
    std::vector<int> pcover_dims;       // finite-field mode; = dims when semisimple
    int regular_class_count = -1;       // complex mode
    long long field_p = 0;              // finite-field mode
    int field_e = 0;
    int trivial_index = -1;             // index of the trivial module, if present
};

/// Number of conjugacy classes of L that are xi-regular: x with
/// xi(x,y) = xi(y,x) for every y in the centralizer of x. Regularity is
/// verified to be constant on classes.
int xi_regular_class_count(const GroupPtr& L, const Cochain& xi);

/// True iff there is exactly one xi-regular class; |L| must then be a
/// perfect square (asserted).
bool is_nondegenerate(const GroupPtr& L, const Cochain& xi);

/// Complete list of pairwise inequivalent irreducibles of k_xi[L] over C:
/// regular representation split by seeded random Hermitian commutant
/// averaging. Hard postconditions: sum dim^2 = |L| and #irreps =
/// xi_regular_class_count.
TwistedAlgebraReport irreps_char0(const TwistedAlgebra& alg,
                                  uint64_t seed = kDefaultSeed);

/// Contragredient sigma(x) = rho(x^{-1})^T, rescaled by the explicit
/// coboundary mu(x) = xi(x, x^{-1}) so that its cocycle is exactly xi^{-1}.
IrrepRecord dual_irrep(const IrrepRecord& v, const Cochain& xi);

/// rho'(x') = rho(iso^{-1}(x')): transport along a verified isomorphism
/// L -> L' given as local index map.
IrrepRecord transport_irrep(const IrrepRecord& v, const GroupPtr& L,
                            const GroupPtr& Lp, std::span<const int> iso);

/// Composition factors and projective covers of the regular module of
/// k_xi[L] over a finite splitting field of characteristic p (MeatAxe-style
/// chop + layered-trace radical + lifted idempotents). Asserts
/// sum dim(P_i) dim(S_i) = |L|.
TwistedAlgebraReport modular_report(const TwistedAlgebra& alg,
                                    uint64_t seed = kDefaultSeed);

/// Multiplication law check for a complex irrep (exhaustive over pairs).
bool satisfies_multiplication_law(const IrrepRecord& v, const GroupPtr& L,
                                  const Cochain& xi, double tol = 1e-7);

} // namespace gtcat
