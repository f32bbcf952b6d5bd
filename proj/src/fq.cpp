#include "gtcat/fq.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <span>

namespace gtcat {

namespace {

// ---- tiny F_p polynomial helpers, used only to find the defining polynomial

using PPoly = std::vector<long long>; // little-endian, coefficients mod p

PPoly ptrim(PPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> t(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    // reduce mod f (monic)
    const size_t df = f.size() - 1;
    for (size_t k = t.size(); k-- > df;) {
        const long long c = t[k] % p;
        if (c == 0) continue;
        for (size_t j = 0; j < df; ++j)
            t[k - df + j] = ((t[k - df + j] - c * f[j]) % p + p) % p;
        t[k] = 0;
    }
    t.resize(df);
    return ptrim(t);
}

PPoly pmodpow(PPoly base, long long n, const PPoly& f, long long p) {
    PPoly r = {1};
    while (n > 0) {
        if (n & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        n >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, long long p) {
    a = ptrim(a);
    b = ptrim(b);
    while (!b.empty()) {
        // a mod b
        long long lead_inv = 1;
        {
            long long l = b.back(), t = 1, y = l, n = p - 2;
            while (n) { if (n & 1) t = t * y % p; y = y * y % p; n >>= 1; }
            lead_inv = t;
        }
        while (a.size() >= b.size() && !a.empty()) {
            const long long c = a.back() * lead_inv % p;
            const size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[off + j] = ((a[off + j] - c * b[j]) % p + p) % p;
            a = ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool p_irreducible(const PPoly& f, long long p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e == 1) return true;
    // x^(p^e) == x (mod f) and gcd(x^(p^(e/l)) - x, f) = 1 for prime l | e
    PPoly x = {0, 1};
    PPoly xp = x;
    std::vector<PPoly> frob(e + 1); // frob[k] = x^(p^k) mod f
    frob[0] = x;
    for (int k = 1; k <= e; ++k) frob[k] = pmodpow(frob[k - 1], p, f, p);
    if (ptrim(frob[e]) != ptrim(x)) return false;
    for (int l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        PPoly diff = frob[e / l];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        if (!pgcd(diff, f, p).empty() && pgcd(diff, f, p).size() > 1) return false;
    }
    (void)xp;
    return true;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FqField::FqField(long long p, int e) : p_(p), e_(e) {
    require(is_prime_ll(p), "characteristic must be prime");
    require(e >= 1 && e <= kMaxDeg, "field extension degree out of range");
    q_ = 1;
    for (int i = 0; i < e; ++i) {
        require(q_ <= (1LL << 50) / p, "field too large");
        q_ *= p;
    }
    // canonical defining polynomial: first monic irreducible in counter order
    if (e == 1) {
        def_poly_ = {0, 1};
    } else {
        bool found = false;
        long long span = 1;
        for (int i = 0; i < e; ++i) span *= p;
        for (long long k = 0; k < span && !found; ++k) {
            PPoly f(e + 1, 0);
            long long v = k;
            for (int i = 0; i < e; ++i) { f[i] = v % p; v /= p; }
            f[e] = 1;
            if (p_irreducible(f, p)) {
                def_poly_ = f;
                found = true;
            }
        }
        ensure(found, "no irreducible polynomial found");
    }
    // reduction rows: x^{e+k} mod f for k = 0..e-2
    if (e > 1) {
        red_.resize(e - 1);
        std::vector<long long> cur(e); // x^e mod f = -f[0..e-1]
        for (int i = 0; i < e; ++i) cur[i] = (p - def_poly_[i]) % p;
        for (int k = 0; k < e - 1; ++k) {
            red_[k].assign(cur.begin(), cur.end());
            // cur = x * cur mod f
            std::vector<long long> nxt(e, 0);
            const long long top = cur[e - 1];
            for (int i = e - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            for (int i = 0; i < e; ++i)
                nxt[i] = (nxt[i] + top * ((p - def_poly_[i]) % p)) % p;
            cur = nxt;
        }
    }
}

FqField FqField::with_root_of_unity(long long p, long long m) {
    require(is_prime_ll(p), "characteristic must be prime");
    require(m >= 1, "root-of-unity order must be positive");
    require(m % p != 0, "root-of-unity order divisible by the characteristic");
    long long pe = 1;
    for (int e = 1; e <= kMaxDeg; ++e) {
        pe = pe * p % m;
        if (m == 1 || pe == 1 % m) return FqField(p, e);
    }
    throw DomainError("field-extension cap exceeded while embedding roots of unity");
}

FqField::Elem FqField::one() const {
    Elem r{};
    r[0] = 1;
    return r;
}

FqField::Elem FqField::from_int(long long v) const {
    Elem r{};
    r[0] = static_cast<uint32_t>(((v % p_) + p_) % p_);
    return r;
}

bool FqField::is_zero(const Elem& a) const {
    for (int i = 0; i < e_; ++i)
        if (a[i]) return false;
    return true;
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
    Elem r{};
    for (int i = 0; i < e_; ++i) {
        uint32_t s = a[i] + b[i];
        r[i] = s >= p_ ? s - static_cast<uint32_t>(p_) : s;
    }
    return r;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
    Elem r{};
    for (int i = 0; i < e_; ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - b[i];
        r[i] = static_cast<uint32_t>(s < 0 ? s + p_ : s);
    }
    return r;
}

FqField::Elem FqField::neg(const Elem& a) const { return sub(zero(), a); }

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
    uint64_t t[2 * kMaxDeg - 1] = {};
    for (int i = 0; i < e_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < e_; ++j) t[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        const uint64_t c = t[k] % p_;
        if (c) {
            const auto& row = red_[k - e_];
            for (int i = 0; i < e_; ++i) t[i] += c * row[i];
        }
        t[k] = 0;
    }
    Elem r{};
    for (int i = 0; i < e_; ++i) r[i] = static_cast<uint32_t>(t[i] % p_);
    return r;
}

FqField::Elem FqField::pow(Elem a, long long n) const {
    if (n == 0) return one();
    if (is_zero(a)) {
        require(n > 0, "0 raised to a negative power");
        return zero();
    }
    n = ((n % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
    Elem r = one();
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FqField::Elem FqField::inv(const Elem& a) const {
    require(!is_zero(a), "division by zero in F_q");
    return pow(a, q_ - 2);
}

FqField::Elem FqField::frobenius(const Elem& a, int k) const {
    k = ((k % e_) + e_) % e_;
    Elem r = a;
    for (int i = 0; i < k; ++i) r = pow(r, p_);
    return r;
}

FqField::Elem FqField::frobenius_inv(const Elem& a, int k) const {
    k = ((k % e_) + e_) % e_;
    return frobenius(a, e_ - k == e_ ? 0 : e_ - k);
}

long long FqField::encode(const Elem& a) const {
    long long v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + a[i];
    return v;
}

FqField::Elem FqField::decode(long long v) const {
    Elem r{};
    for (int i = 0; i < e_; ++i) { r[i] = static_cast<uint32_t>(v % p_); v /= p_; }
    return r;
}

FqField::Elem FqField::zeta(long long m) const {
    require(m >= 1 && (q_ - 1) % m == 0, "mu_m does not embed in this field");
    if (generator_ < 0) {
        // prime factors of q-1 by trial division
        std::vector<long long> primes;
        long long n = q_ - 1;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                primes.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) primes.push_back(n);
        for (long long v = 1; v < q_; ++v) {
            const Elem cand = decode(v);
            bool gen = true;
            for (long long ell : primes)
                if (eq(pow(cand, (q_ - 1) / ell), one())) { gen = false; break; }
            if (gen) { generator_ = v; break; }
        }
        ensure(generator_ >= 0, "no generator of F_q^* found");
    }
    return pow(decode(generator_), (q_ - 1) / m);
}

// ---------------------------------------------------------------- matrices

FqMatrix FqMatrix::identity(const FqField& F, int n) {
    FqMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
    return I;
}

FqMatrix fq_mul(const FqField& F, const FqMatrix& A, const FqMatrix& B) {
    require(A.cols == B.rows, "matrix shape mismatch");
    FqMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const auto& aik = A.at(i, k);
            if (F.is_zero(aik)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

FqMatrix fq_add(const FqField& F, const FqMatrix& A, const FqMatrix& B) {
    require(A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch");
    FqMatrix C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

FqMatrix fq_scale(const FqField& F, const FqMatrix& A, const FqField::Elem& c) {
    FqMatrix C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(A.a[i], c);
    return C;
}

FqMatrix fq_transpose(const FqMatrix& A) {
    FqMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

namespace {

// row echelon in place; returns pivot columns
std::vector<int> rref(const FqField& F, FqMatrix& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int pr = -1;
        for (int i = r; i < A.rows; ++i)
            if (!F.is_zero(A.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
        const auto piv_inv = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), piv_inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || F.is_zero(A.at(i, c))) continue;
            const auto f = A.at(i, c);
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int fq_rank(const FqField& F, FqMatrix A) {
    return static_cast<int>(rref(F, A).size());
}

std::vector<std::vector<FqField::Elem>> nullspace_fq(const FqField& F,
                                                     const FqMatrix& A) {
    FqMatrix R = A;
    const std::vector<int> pivots = rref(F, R);
    std::vector<char> is_pivot(A.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<FqField::Elem>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<FqField::Elem> v(A.cols, F.zero());
        v[c] = F.one();
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < c) v[pivots[r]] = F.neg(R.at(static_cast<int>(r), c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<FqField::Elem>> fq_solve_all(const FqField& F,
                                                     const FqMatrix& A,
                                                     std::span<const FqField::Elem> b,
                                                     bool* solvable) {
    require(static_cast<int>(b.size()) == A.rows, "rhs length mismatch");
    FqMatrix Aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) Aug.at(i, j) = A.at(i, j);
        Aug.at(i, A.cols) = b[i];
    }
    const std::vector<int> pivots = rref(F, Aug);
    if (!pivots.empty() && pivots.back() == A.cols) {
        if (solvable) *solvable = false;
        return {};
    }
    if (solvable) *solvable = true;
    std::vector<FqField::Elem> x(A.cols, F.zero());
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = Aug.at(static_cast<int>(r), A.cols);
    return {std::move(x)};
}

std::vector<FqField::Elem> fq_charpoly(const FqField& F, FqMatrix A) {
    require(A.rows == A.cols, "charpoly needs a square matrix");
    const int n = A.rows;
    // Hessenberg reduction by similarity
    for (int k = 0; k + 2 < n; ++k) {
        int pr = -1;
        for (int i = k + 1; i < n; ++i)
            if (!F.is_zero(A.at(i, k))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(A.at(pr, j), A.at(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(A.at(i, pr), A.at(i, k + 1));
        }
        const auto piv_inv = F.inv(A.at(k + 1, k));
        for (int i = k + 2; i < n; ++i) {
            if (F.is_zero(A.at(i, k))) continue;
            const auto f = F.mul(A.at(i, k), piv_inv);
            for (int j = 0; j < n; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(k + 1, j)));
            for (int i2 = 0; i2 < n; ++i2)
                A.at(i2, k + 1) = F.add(A.at(i2, k + 1), F.mul(f, A.at(i2, i)));
        }
    }
    // p_m(t) = (t - H[m-1][m-1]) p_{m-1}
    //        - sum_i H[m-1-i][m-1] (prod_j H[j][j-1]) p_{m-1-i}
    std::vector<std::vector<FqField::Elem>> p(n + 1);
    p[0] = {F.one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<FqField::Elem> pm(m + 1, F.zero());
        // t * p_{m-1}
        for (int i = 0; i < m; ++i) pm[i + 1] = p[m - 1][i];
        // - H[m-1][m-1] * p_{m-1}
        for (int i = 0; i < m; ++i)
            pm[i] = F.sub(pm[i], F.mul(A.at(m - 1, m - 1), p[m - 1][i]));
        auto chain = F.one();
        for (int i = 1; i < m; ++i) {
            chain = F.mul(chain, A.at(m - i, m - i - 1));
            const auto coef = F.mul(A.at(m - 1 - i, m - 1), chain);
            if (F.is_zero(coef)) continue;
            for (size_t j = 0; j < p[m - 1 - i].size(); ++j)
                pm[j] = F.sub(pm[j], F.mul(coef, p[m - 1 - i][j]));
        }
        p[m] = std::move(pm);
    }
    return p[n];
}

// ---------------------------------------------------------------- polynomials

FqPoly poly_trim(const FqField& F, FqPoly f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
    return f;
}

int poly_deg(const FqField& F, const FqPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!F.is_zero(f[i])) return i;
    return -1;
}

FqPoly poly_mul(const FqField& F, const FqPoly& f, const FqPoly& g) {
    if (f.empty() || g.empty()) return {};
    FqPoly h(f.size() + g.size() - 1, F.zero());
    for (size_t i = 0; i < f.size(); ++i) {
        if (F.is_zero(f[i])) continue;
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = F.add(h[i + j], F.mul(f[i], g[j]));
    }
    return poly_trim(F, std::move(h));
}

namespace {

// f = q*g + r with deg r < deg g; returns {q, r}
std::pair<FqPoly, FqPoly> poly_divmod(const FqField& F, FqPoly f, const FqPoly& g0) {
    FqPoly g = poly_trim(F, g0);
    require(!g.empty(), "polynomial division by zero");
    f = poly_trim(F, std::move(f));
    const auto lead_inv = F.inv(g.back());
    FqPoly q;
    if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, F.zero());
    while (f.size() >= g.size() && !f.empty()) {
        const auto c = F.mul(f.back(), lead_inv);
        const size_t off = f.size() - g.size();
        q[off] = c;
        for (size_t j = 0; j < g.size(); ++j)
            f[off + j] = F.sub(f[off + j], F.mul(c, g[j]));
        f = poly_trim(F, std::move(f));
    }
    return {poly_trim(F, std::move(q)), std::move(f)};
}

} // namespace

FqPoly poly_mod(const FqField& F, FqPoly f, const FqPoly& g) {
    return poly_divmod(F, std::move(f), g).second;
}

FqPoly poly_monic(const FqField& F, FqPoly f) {
    f = poly_trim(F, std::move(f));
    if (f.empty()) return f;
    const auto c = F.inv(f.back());
    for (auto& x : f) x = F.mul(x, c);
    return f;
}

FqPoly poly_gcd(const FqField& F, FqPoly f, FqPoly g) {
    f = poly_trim(F, std::move(f));
    g = poly_trim(F, std::move(g));
    while (!g.empty()) {
        FqPoly r = poly_mod(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(F, std::move(f));
}

FqPoly poly_derivative(const FqField& F, const FqPoly& f) {
    FqPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(F.mul(f[i], F.from_int(static_cast<long long>(i))));
    return poly_trim(F, std::move(d));
}

FqPoly poly_modpow(const FqField& F, FqPoly base, long long n, const FqPoly& mod) {
    FqPoly r = {F.one()};
    base = poly_mod(F, std::move(base), mod);
    while (n > 0) {
        if (n & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        n >>= 1;
    }
    return r;
}

namespace {

FqPoly random_poly(const FqField& F, int deg_below, std::mt19937_64& rng) {
    FqPoly f(deg_below, F.zero());
    std::uniform_int_distribution<long long> dist(0, F.q() - 1);
    for (auto& c : f) c = F.decode(dist(rng));
    return poly_trim(F, std::move(f));
}

// equal-degree factorization: all irreducible factors of f have degree d
void edf(const FqField& F, FqPoly f, int d, std::mt19937_64& rng,
         std::vector<FqPoly>& out) {
    f = poly_monic(F, std::move(f));
    const int deg = poly_deg(F, f);
    if (deg == d) { out.push_back(std::move(f)); return; }
    for (int attempt = 0; attempt < 256; ++attempt) {
        FqPoly a = random_poly(F, deg, rng);
        if (poly_deg(F, a) < 1) continue;
        FqPoly b;
        if (F.p() == 2) {
            // trace map over F_2: sum of a^(2^i), i < e*d
            FqPoly t = a, acc = a;
            for (int i = 1; i < F.e() * d; ++i) {
                t = poly_mod(F, poly_mul(F, t, t), f);
                for (size_t j = 0; j < t.size(); ++j) {
                    if (acc.size() <= j) acc.resize(j + 1, F.zero());
                    acc[j] = F.add(acc[j], t[j]);
                }
            }
            b = poly_trim(F, std::move(acc));
        } else {
            // a^((q^d-1)/2) - 1, with s = prod a^(q^i)
            FqPoly s = a, aq = a;
            for (int i = 1; i < d; ++i) {
                aq = poly_modpow(F, aq, F.q(), f);
                s = poly_mod(F, poly_mul(F, s, aq), f);
            }
            b = poly_modpow(F, s, (F.q() - 1) / 2, f);
            if (b.empty()) b = {F.zero()};
            b[0] = F.sub(b[0], F.one());
            b = poly_trim(F, std::move(b));
        }
        if (b.empty()) continue;
        FqPoly g = poly_gcd(F, b, f);
        const int dg = poly_deg(F, g);
        if (dg > 0 && dg < deg) {
            auto [quot, rem] = poly_divmod(F, f, g);
            ensure(poly_deg(F, rem) < 0, "equal-degree split not exact");
            edf(F, std::move(g), d, rng, out);
            edf(F, std::move(quot), d, rng, out);
            return;
        }
    }
    throw DomainError("equal-degree factorization made no progress; retry with a new seed");
}

// distinct-degree factorization of squarefree monic f
void ddf(const FqField& F, FqPoly f, std::mt19937_64& rng, int outer_mult,
         std::vector<std::pair<FqPoly, int>>& out) {
    FqPoly h = {F.zero(), F.one()}; // x
    int d = 0;
    while (poly_deg(F, f) >= 2 * (d + 1)) {
        ++d;
        h = poly_modpow(F, h, F.q(), f);
        FqPoly hx = h;
        if (hx.size() < 2) hx.resize(2, F.zero());
        hx[1] = F.sub(hx[1], F.one());
        FqPoly g = poly_gcd(F, hx, f);
        if (poly_deg(F, g) > 0) {
            std::vector<FqPoly> pieces;
            edf(F, g, d, rng, pieces);
            for (auto& piece : pieces) out.emplace_back(std::move(piece), outer_mult);
            f = poly_divmod(F, f, g).first;
            h = poly_mod(F, h, f);
        }
    }
    if (poly_deg(F, f) > 0) out.emplace_back(poly_monic(F, std::move(f)), outer_mult);
}

// char-p squarefree decomposition (Yun, adapted): emits squarefree parts with
// multiplicities into ddf
void squarefree_rec(const FqField& F, FqPoly f, int mult, std::mt19937_64& rng,
                    std::vector<std::pair<FqPoly, int>>& out) {
    f = poly_monic(F, std::move(f));
    if (poly_deg(F, f) <= 0) return;
    FqPoly fp = poly_derivative(F, f);
    if (poly_deg(F, fp) < 0) {
        // f = g(x^p); p-th roots of coefficients via inverse Frobenius
        const long long p = F.p();
        FqPoly g((poly_deg(F, f)) / p + 1, F.zero());
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = F.frobenius_inv(f[i * p], 1);
        squarefree_rec(F, std::move(g), mult * static_cast<int>(p), rng, out);
        return;
    }
    FqPoly c = poly_gcd(F, f, fp);
    FqPoly w = poly_divmod(F, f, c).first;
    int i = 1;
    while (poly_deg(F, w) > 0) {
        FqPoly y = poly_gcd(F, w, c);
        FqPoly z = poly_divmod(F, w, y).first;
        if (poly_deg(F, z) > 0) ddf(F, poly_monic(F, std::move(z)), rng, mult * i, out);
        w = std::move(y);
        c = poly_divmod(F, c, w).first;
        ++i;
    }
    if (poly_deg(F, c) > 0) squarefree_rec(F, std::move(c), mult, rng, out);
}

} // namespace

std::vector<std::pair<FqPoly, int>> poly_factor(const FqField& F, FqPoly f,
                                                uint64_t seed) {
    f = poly_monic(F, std::move(f));
    require(poly_deg(F, f) >= 1, "cannot factor a constant polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FqPoly, int>> raw;
    squarefree_rec(F, std::move(f), 1, rng, raw);
    // merge equal factors
    std::vector<std::pair<FqPoly, int>> out;
    for (auto& [poly, mult] : raw) {
        bool merged = false;
        for (auto& [q, qm] : out)
            if (q == poly) { qm += mult; merged = true; break; }
        if (!merged) out.emplace_back(std::move(poly), mult);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = a.first.size(); i-- > 0;) {
            const long long ea = F.encode(a.first[i]), eb = F.encode(b.first[i]);
            if (ea != eb) return ea < eb;
        }
        return false;
    });
    return out;
}

FqMatrix fq_poly_eval(const FqField& F, const FqPoly& p, const FqMatrix& A) {
    require(A.rows == A.cols, "polynomial of a non-square matrix");
    FqMatrix R(A.rows, A.cols);
    for (size_t i = p.size(); i-- > 0;) {
        R = fq_mul(F, R, A);
        for (int d = 0; d < A.rows; ++d) R.at(d, d) = F.add(R.at(d, d), p[i]);
    }
    return R;
}

} // namespace gtcat
