// Random finite instances for the property tests and the acceptance batch.
#ifndef DIFFCOH_TOOLS_RANDOM_INSTANCES_HPP
#define DIFFCOH_TOOLS_RANDOM_INSTANCES_HPP

#include <numeric>
#include <random>

#include <diffcoh/complex.hpp>
#include <diffcoh/galois.hpp>
#include <diffcoh/smith.hpp>

namespace diffcoh::random
{

inline IntMatrix matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = d(rng);
    return M;
}

/// Integer differentials d_k : Z^{a_k} -> Z^{a_{k+1}} with d_{k+1} d_k = 0.
inline std::vector<IntMatrix> integer_differentials(std::mt19937_64& rng, const std::vector<std::size_t>& ranks)
{
    std::vector<IntMatrix> d;
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k)
    {
        if (k == 0)
        {
            d.push_back(matrix(rng, ranks[1], ranks[0], -3, 3));
            continue;
        }
        // rows of d_k must annihilate the image of d_{k-1}: combine a basis of the left kernel
        const IntMatrix K = integer_kernel(d.back().transpose()); // columns y with y^T d_{k-1} = 0
        IntMatrix R = matrix(rng, ranks[k + 1], K.cols(), -2, 2);
        d.push_back(R * K.transpose());
    }
    return d;
}

inline CochainComplex reduce_mod(const std::vector<IntMatrix>& d, const std::vector<std::size_t>& ranks, const Integer& n)
{
    std::vector<FgAbGroup> levels;
    for (auto a : ranks)
        levels.push_back(FgAbGroup::from_moduli(IntVector(a, n)));
    return CochainComplex::from_matrices(levels, d);
}

/**
 * A two-row bicomplex of finite groups (Z/n)^a with at most 64 elements per
 * level.  row0 = C and row1 = C ⊕ E; the vertical map is
 * (λ·id + dh + hd, d_E h' + h' d_C), a chain map by construction.
 */
inline TwoRowBicomplex finite_bicomplex(std::mt19937_64& rng, std::size_t max_degree = 4)
{
    static const std::vector<int> moduli{2, 3, 4, 5, 6, 8};
    std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1), deg(1, max_degree);
    const int n = moduli[pick(rng)];
    std::size_t cap = 0; // largest total rank with n^cap <= 64
    while (std::pow(n, cap + 1) <= 64.0)
        ++cap;
    const std::size_t top = deg(rng) + 1;
    std::uniform_int_distribution<std::size_t> rk(0, std::min<std::size_t>(2, cap));
    std::vector<std::size_t> a(top), b(top);
    for (std::size_t k = 0; k < top; ++k)
    {
        a[k] = rk(rng);
        b[k] = std::min(rk(rng), cap - a[k]);
    }
    const auto dC = integer_differentials(rng, a), dE = integer_differentials(rng, b);
    // homotopies h_k : C^k -> C^{k-1}, h'_k : C^k -> E^{k-1}
    std::vector<IntMatrix> h(top), hp(top);
    for (std::size_t k = 0; k < top; ++k)
    {
        h[k] = k ? matrix(rng, a[k - 1], a[k], -2, 2) : IntMatrix(0, a[0]);
        hp[k] = k ? matrix(rng, b[k - 1], a[k], -2, 2) : IntMatrix(0, a[0]);
    }
    std::uniform_int_distribution<int> lam(-3, 3);
    const int l = lam(rng);
    std::vector<IntMatrix> dD, f;
    std::vector<std::size_t> ab(top);
    for (std::size_t k = 0; k < top; ++k)
        ab[k] = a[k] + b[k];
    for (std::size_t k = 0; k + 1 < top; ++k)
        dD.push_back(IntMatrix::block_diagonal(dC[k], dE[k]));
    for (std::size_t k = 0; k < top; ++k)
    {
        IntMatrix fc = Integer(l) * IntMatrix::identity(a[k]);
        IntMatrix fe(b[k], a[k]);
        if (k > 0)
        {
            fc = fc + dC[k - 1] * h[k];
            fe = fe + dE[k - 1] * hp[k];
        }
        if (k + 1 < top)
        {
            fc = fc + h[k + 1] * dC[k];
            fe = fe + hp[k + 1] * dC[k];
        }
        f.push_back(IntMatrix::vstack(fc, fe));
    }
    const CochainComplex C = reduce_mod(dC, a, n), D = reduce_mod(dD, ab, n);
    return TwoRowBicomplex(ChainMap::from_matrices(C, D, f));
}

/// Z/n with γ = ×g (g^N ≡ 1) and σ = ×s, n <= 64, N <= 6.
inline CyclicGaloisData cyclic_galois_data(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> lvl(1, 6), ord(1, 64), mult(0, 63);
    for (;;)
    {
        const int N = lvl(rng), n = ord(rng);
        std::vector<int> roots;
        for (int g = 0; g < n; ++g)
        {
            if (std::gcd(g, n) != 1)
                continue;
            long long x = 1;
            for (int i = 0; i < N; ++i)
                x = x * g % n;
            if (x == 1 % n)
                roots.push_back(g);
        }
        if (roots.empty())
            continue;
        FgAbGroup M = FgAbGroup::cyclic(n);
        const int g = roots[static_cast<std::size_t>(mult(rng)) % roots.size()];
        return CyclicGaloisData(static_cast<std::size_t>(N), M, GroupHom::scalar(M, g), GroupHom::scalar(M, mult(rng)));
    }
}

} // namespace diffcoh::random

#endif // DIFFCOH_TOOLS_RANDOM_INSTANCES_HPP
