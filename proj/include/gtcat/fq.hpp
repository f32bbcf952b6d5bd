#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gtcat/errors.hpp"

namespace gtcat {

/// F_{p^e} with a deterministic defining polynomial: the lexicographically
/// first monic irreducible of degree e over F_p (coefficients read as the
/// base-p digits of an increasing counter, constant term least significant).
class FqField {
public:
    static constexpr int kMaxDeg = 12;
    using Elem = std::array<uint32_t, kMaxDeg>; // coefficients, degree < e

    FqField(long long p, int e);

    /// Smallest e such that m | p^e - 1, so mu_m embeds in F_q^*.
    static FqField with_root_of_unity(long long p, long long m);

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    const std::vector<long long>& defining_poly() const { return def_poly_; }

    Elem zero() const { return Elem{}; }
    Elem one() const;
    Elem from_int(long long v) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, long long n) const;

    /// x -> x^(p^k); k may be any integer, reduced mod e.
    Elem frobenius(const Elem& a, int k) const;
    /// inverse of frobenius(., k)
    Elem frobenius_inv(const Elem& a, int k) const;

    /// Canonical primitive m-th root of unity (requires m | q - 1):
    /// gen^((q-1)/m) for the first generator of F_q^* in element order.
    Elem zeta(long long m) const;

    /// total order used for canonical choices: integer encoding of coeffs
    long long encode(const Elem& a) const;
    Elem decode(long long v) const;

private:
    long long p_;
    int e_;
    long long q_;
    std::vector<long long> def_poly_;            // monic, degree e
    std::vector<std::vector<uint32_t>> red_;     // x^{e+k} mod f, k = 0..e-2
    mutable long long generator_ = -1;           // cached
};

/// Dense matrix over F_q.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<FqField::Elem> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    FqField::Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const FqField::Elem& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }
    static FqMatrix identity(const FqField& F, int n);
};

FqMatrix fq_mul(const FqField& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix fq_add(const FqField& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix fq_scale(const FqField& F, const FqMatrix& A, const FqField::Elem& c);
FqMatrix fq_transpose(const FqMatrix& A);
int fq_rank(const FqField& F, FqMatrix A);

/// Basis of the right kernel {x : A x = 0}; dimension = cols - rank.
std::vector<std::vector<FqField::Elem>> nullspace_fq(const FqField& F,
                                                     const FqMatrix& A);

/// Solve A x = b; empty optional when inconsistent.
std::vector<std::vector<FqField::Elem>> fq_solve_all(const FqField& F,
                                                     const FqMatrix& A,
                                                     std::span<const FqField::Elem> b,
                                                     bool* solvable);

/// Characteristic polynomial det(tI - A), little-endian coefficients,
/// computed via Hessenberg reduction (exact over F_q).
std::vector<FqField::Elem> fq_charpoly(const FqField& F, FqMatrix A);

// ---------------------------------------------------------------- polynomials

/// Polynomials over F_q, little-endian coefficient vectors.
using FqPoly = std::vector<FqField::Elem>;

FqPoly poly_trim(const FqField& F, FqPoly f);
int poly_deg(const FqField& F, const FqPoly& f);
FqPoly poly_mul(const FqField& F, const FqPoly& f, const FqPoly& g);
FqPoly poly_mod(const FqField& F, FqPoly f, const FqPoly& g);
FqPoly poly_gcd(const FqField& F, FqPoly f, FqPoly g); // monic
FqPoly poly_monic(const FqField& F, FqPoly f);
FqPoly poly_derivative(const FqField& F, const FqPoly& f);
FqPoly poly_modpow(const FqField& F, FqPoly base, long long n, const FqPoly& mod);

/// Irreducible factors with multiplicities (Cantor-Zassenhaus; seeded).
std::vector<std::pair<FqPoly, int>> poly_factor(const FqField& F, FqPoly f,
                                                uint64_t seed);

/// Evaluate p(A) for a matrix A.
FqMatrix fq_poly_eval(const FqField& F, const FqPoly& p, const FqMatrix& A);

} // namespace gtcat
