#include "mdft/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mdft {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("MDFT_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return MDFT_DATA_DIR;
}

Matrix<Gf> load_matrix_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  std::optional<GaloisField> field;
  std::vector<std::vector<Gf>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (!field) {
      std::string key;
      std::uint64_t p = 0;
      if (!(ss >> key >> p) || key != "p") throw std::runtime_error(path.string() + ": expected 'p <prime>' header");
      field = GaloisField::prime(p);
      continue;
    }
    std::vector<Gf> row;
    std::int64_t v = 0;
    while (ss >> v) row.push_back(field->element(v));
    if (!ss.eof()) throw std::runtime_error(path.string() + ": bad entry in line '" + line + "'");
    rows.push_back(std::move(row));
  }
  if (!field || rows.empty()) throw std::runtime_error(path.string() + ": no matrix data");
  auto m = Matrix<Gf>::from_rows(field->zero(), rows);
  if (!m.is_square()) throw std::runtime_error(path.string() + ": matrix is not square");
  return m;
}

Matrix<Gf> reference_modular_dft(std::uint64_t p, unsigned n) {
  if (!((p == 2 && n == 3) || (p == 3 && n == 4))) {
    throw std::invalid_argument("reference modular DFT matrices exist only for (p, n) = (2, 3) and (3, 4)");
  }
  return load_matrix_fixture(data_dir() / ("modular_dft_" + std::to_string(p) + "_" + std::to_string(n) + ".txt"));
}

}  // namespace mdft
