#include "fullrank/linalg.hpp"

#include <string>
#include <vector>

namespace fullrank {

std::int64_t centered_residue(std::int64_t x, std::int64_t p) {
    if (p < 3 || p % 2 == 0) throw InvalidInput("centered_residue: modulus must be odd and >= 3, got " + std::to_string(p));
    std::int64_t r = residue(x, p);
    if (r > (p - 1) / 2) r -= p;
    return r;
}

std::int64_t det_mod_p(const IntMatrix& square, std::int64_t p) {
    if (square.rows() != square.cols()) throw InvalidInput("det_mod_p: matrix is not square");
    if (!is_prime(p)) throw InvalidInput("det_mod_p: modulus " + std::to_string(p) + " is not prime");
    return det_mod_p_unchecked(square.entries(), p);
}

BigInt det_exact(const IntMatrix& square) {
    if (square.rows() != square.cols()) throw InvalidInput("det_exact: matrix is not square");
    return det_bareiss<BigInt>(square.entries());
}

Entries column_block(const Entries& a, std::span<const int> cols) {
    Entries out(a.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = a.col(cols[c]);
    return out;
}

IntMatrix select_columns(const IntMatrix& a, std::span<const int> cols) {
    if (cols.empty()) throw InvalidInput("select_columns: empty column list");
    std::vector<bool> seen(static_cast<std::size_t>(a.cols()), false);
    for (int c : cols) {
        if (c < 0 || c >= a.cols()) {
            throw InvalidInput("select_columns: index " + std::to_string(c) + " out of range [0, " +
                               std::to_string(a.cols()) + ")");
        }
        if (seen[static_cast<std::size_t>(c)]) throw InvalidInput("select_columns: duplicate index " + std::to_string(c));
        seen[static_cast<std::size_t>(c)] = true;
    }
    return IntMatrix(column_block(a.entries(), cols), a.entry_bound(), a.modulus());
}

}  // namespace fullrank
