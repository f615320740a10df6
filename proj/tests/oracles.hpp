// Test-only reference implementations, kept independent of the library code
// paths they check: plain direct summation, dense matrix products, and full
// enumeration. Nothing here calls into rrnht beyond basic value types.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// Direct integer summation, no reduction.
inline std::uint64_t integer_autocorr(const std::vector<std::uint64_t>& a,
                                      std::size_t k) {
    std::uint64_t sum = 0;
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) {
        sum += a[j] * a[(j + k) % n];
    }
    return sum;
}

inline std::uint64_t mod_autocorr(const std::vector<std::uint64_t>& a,
                                  std::uint64_t q, std::size_t k) {
    return integer_autocorr(a, k) % q;
}

inline std::uint64_t mod_crosscorr(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b,
                                   std::uint64_t q, std::size_t k) {
    std::uint64_t sum = 0;
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) {
        sum = (sum + a[j] * b[(j + k) % n]) % q;
    }
    return sum;
}

// Full-lag ideality scan: every off-peak lag zero mod q, peak coprime to q,
// all entries nonzero mod q.
inline bool is_ideal(const std::vector<std::uint64_t>& a, std::uint64_t q) {
    for (const std::uint64_t v : a) {
        if (v % q == 0) return false;
    }
    const std::size_t n = a.size();
    for (std::size_t k = 1; k < n; ++k) {
        if (mod_autocorr(a, q, k) != 0) return false;
    }
    return std::gcd(mod_autocorr(a, q, 0), q) == 1;
}

// Enumerate [1, q)^n and collect every ideal tuple.
inline std::vector<std::vector<std::uint64_t>> enumerate_ideal(std::size_t n,
                                                               std::uint64_t q) {
    std::vector<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> tuple(n, 1);
    while (true) {
        if (is_ideal(tuple, q)) found.push_back(tuple);
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < q) break;
            tuple[pos] = 1;
            if (pos == 0) return found;
        }
    }
}

// Dense N * N^T from an explicit row-major matrix.
inline std::vector<std::vector<std::uint64_t>> gram_matrix(
    const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t q) {
    const std::size_t k = m.size();
    std::vector<std::vector<std::uint64_t>> out(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t dot = 0;
            for (std::size_t t = 0; t < k; ++t) {
                dot = (dot + m[i][t] * m[j][t]) % q;
            }
            out[i][j] = dot;
        }
    }
    return out;
}

// Materialize the circulant whose row i is row 0 cyclically right-shifted by i.
inline std::vector<std::vector<std::uint64_t>> circulant_rows(
    const std::vector<std::uint64_t>& first_row) {
    const std::size_t k = first_row.size();
    std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            rows[i][t] = first_row[(t + k - i) % k];
        }
    }
    return rows;
}

// The worked 16-element example and its ring.
inline const std::vector<std::uint64_t>& worked_sequence() {
    static const std::vector<std::uint64_t> v{11, 2,  4,  8,  16, 32, 17, 34,
                                              21, 42, 37, 27, 7,  14, 28, 9};
    return v;
}
inline constexpr std::uint64_t kWorkedModulus = 47;

}  // namespace oracle
