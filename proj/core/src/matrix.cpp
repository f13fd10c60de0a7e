#include "fanocfg/matrix.hpp"

namespace fanocfg {

Integer determinant(Matrix<Integer> m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace fanocfg
