#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gtcat/group.hpp"
#include "gtcat/zmod.hpp"

namespace gtcat {

/// A normalized n-cochain on a subgroup S of some ambient group, valued in
/// mu_m and stored as exponents in Z/m (additive notation throughout: the
/// cochain value is zeta_m ^ exponent for a fixed primitive m-th root).
///
/// Normalization: the exponent is 0 whenever any argument is the identity.
/// The value table is indexed by local indices of S.
class Cochain {
public:
    Cochain(Subgroup domain, int degree, long long modulus);

    static Cochain zero(Subgroup domain, int degree, long long modulus = 1);

    const Subgroup& domain() const { return domain_; }
    int degree() const { return degree_; }
    long long modulus() const { return m_; }

    /// value at a tuple of local indices
    long long at_local(std::span<const int> t) const;
    long long at_local(std::initializer_list<int> t) const {
        return at_local(std::span<const int>(t.begin(), t.size()));
    }
    /// value at a tuple of parent-group indices (must lie in the domain)
    long long at_parent(std::span<const int> t) const;
    long long at_parent(std::initializer_list<int> t) const {
        return at_parent(std::span<const int>(t.begin(), t.size()));
    }

    /// set by local tuple; rejects writes that break normalization
    void set_local(std::span<const int> t, long long v);
    void set_local(std::initializer_list<int> t, long long v) {
        set_local(std::span<const int>(t.begin(), t.size()), v);
    }

    bool is_zero() const;
    /// same cochain with modulus new_m (old m must divide it); exponents scale
    Cochain lifted(long long new_m) const;
    /// exponent-wise negation (the inverse cochain)
    Cochain inverse() const;

    const std::vector<long long>& values() const { return values_; }
    std::vector<long long>& mutable_values() { return values_; }

private:
    size_t flat_index(std::span<const int> t) const;
    Subgroup domain_;
    int degree_;
    long long m_;
    std::vector<long long> values_;
};

/// true iff the two cochains agree after lifting both to lcm of moduli
bool cochains_equal(const Cochain& a, const Cochain& b);
/// same cochain at the smallest faithful modulus (divides out the common
/// factor of all values and the modulus)
Cochain reduce_modulus(const Cochain& c);
/// the cochain re-domiciled on the whole of domain().group(); local indices
/// are unchanged
Cochain rebase(const Cochain& c);
/// exponent-wise a - b at lcm modulus (same domain, same degree)
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_add(const Cochain& a, const Cochain& b);

struct CocycleCertificate {
    bool is_cocycle = false;
    std::vector<int> witness; // local tuple of degree+1 indices when false
};

/// (d phi)(g1..g_{n+1}) = phi(g2..) - phi(g1 g2, g3..) + ... -+ phi(g1..gn)
Cochain coboundary(const Cochain& phi);

CocycleCertificate is_cocycle(const Cochain& phi);

/// Standard representative of the q-th class on Z/n: 3-cochain with modulus
/// n^2 and exponent q*a*(b + c - ((b+c) mod n)) at (a,b,c). Verified cocycle.
Cochain preset_omega_cyclic(const GroupPtr& zn, long long q);

/// phi pulled back along a verified homomorphism into phi's group
Cochain pullback(const Cochain& phi, const GroupHom& hom);

/// restriction to a subgroup T of the domain (same parent, T subset of S)
Cochain restrict_cochain(const Cochain& phi, const Subgroup& T);

/// phi^h with phi^h(x1..xn) = phi(h x1 h^{-1}, ..., h xn h^{-1});
/// the domain moves from S to h^{-1} S h. Satisfies phi^{h1 h2} = (phi^{h1})^{h2}.
Cochain conj_twist(const Cochain& phi, int h);

/// omega_g(x,y) = omega(g,x,y) + omega(gxg^{-1}, gyg^{-1}, g)
///              - omega(gxg^{-1}, g, y)  on the whole group.
/// The restriction to the centralizer of g is verified to be a 2-cocycle.
Cochain omega_g(const Cochain& omega, int g);

/// psi_g = (psi^g . omega_g) restricted to g^{-1} H g; verified to satisfy
/// d(psi_g) = omega restricted to g^{-1} H g.
Cochain psi_g(const Cochain& psi, const Cochain& omega, int g, const Subgroup& H);

/// W_g((h1,k1),(h2,k2)) = omega(h1,h2,g) + omega(g,k1,k2) - omega(h1,g,k2)
/// as a 2-cochain on the direct product group H x K (returned via product_out).
Cochain w_g_product(const Cochain& omega, int g, const Subgroup& H,
                    const Subgroup& K, GroupPtr* product_out);

/// xi_g on L^g = H `cap` g K g^{-1}:
///   xi_g(l1,l2) = psi(l1,l2) - eta(g'l1 g, g'l2 g)
///               + omega(l1,l2,g) + omega(g, g'l1 g, g'l2 g)
///               - omega(l1, g, g'l2 g)            (g' = g^{-1})
/// Preconditions d psi = omega|_H, d eta = omega|_K are verified, and the
/// result is verified to be a 2-cocycle.
Cochain xi_g(const Cochain& psi, const Cochain& eta, const Cochain& omega, int g,
             const Subgroup& H, const Subgroup& K);

struct SolveD2Result {
    bool solvable = false;
    long long modulus = 1;            // working modulus of all returned cochains
    std::optional<Cochain> particular;
    std::vector<Cochain> kernel_gens; // generate Z^2(S, mu_m) as a Z/m-module
    std::vector<Cochain> h2_classes;  // one 2-cocycle per H^2(S, G_m) class
};

/// All psi with d psi = target (a 3-cochain on S), parametrized as
/// particular + Z^2; plus one representative per H^2(S, G_m) class of the
/// kernel. Works at a modulus large enough to see every G_m-level class;
/// retries target modulus with m*2 and m*|S| before giving up.
SolveD2Result solve_d2_equals(const Cochain& target);

/// Witness mu (1-cochain) with d mu = a - b, allowing the witness values to
/// live in mu_{m'} for m' up to lcm(m)*|S|; nullopt = definitively not
/// cohomologous over G_m.
std::optional<Cochain> cohomologous(const Cochain& a, const Cochain& b);

} // namespace gtcat
