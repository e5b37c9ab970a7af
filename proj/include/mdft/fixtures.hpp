#pragma once

#include <filesystem>
#include <string>

#include "mdft/fields.hpp"
#include "mdft/matrix.hpp"

namespace mdft {

/// Directory holding the shipped data files: $MDFT_DATA_DIR if set, else the
/// source tree's data/ directory recorded at build time.
std::filesystem::path data_dir();

/// Reads a matrix over F_p from a text file: '#' comments, a "p <prime>"
/// header line, then one whitespace-separated row of residues per line.
/// Throws std::runtime_error on malformed input.
Matrix<Gf> load_matrix_fixture(const std::filesystem::path& path);

/// The stored reference modular DFT matrices for (p, n) = (2, 3) and (3, 4).
Matrix<Gf> reference_modular_dft(std::uint64_t p, unsigned n);

}  // namespace mdft
