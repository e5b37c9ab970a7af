#include "mdft/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mdft/fixtures.hpp"
#include "mdft/linalg.hpp"

namespace mdft {

namespace {

Eigen::MatrixXd to_eigen(const Matrix<Rational>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd d = m * m.transpose() - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().rowwise().sum().maxCoeff();
}

bool less_complex(const std::complex<double>& a, const std::complex<double>& b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

// Largest distance after matching each target to its nearest unused candidate.
double match_error(std::vector<std::complex<double>> targets, std::vector<std::complex<double>> candidates) {
  if (targets.size() != candidates.size()) return INFINITY;
  double worst = 0;
  for (const auto& t : targets) {
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [&](const auto& a, const auto& b) { return std::abs(a - t) < std::abs(b - t); });
    worst = std::max(worst, std::abs(*best - t));
    candidates.erase(best);
  }
  return worst;
}

Rational parse_field(std::istringstream& ss, const std::string& line) {
  std::string tok;
  if (!(ss >> tok)) throw std::runtime_error("fixture: missing value in line '" + line + "'");
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("fixture: bad rational '" + tok + "' in line '" + line + "'");
  }
}

QuadTower parse_tower(std::istringstream& ss, const std::string& line) {
  Rational a = parse_field(ss, line), b = parse_field(ss, line), c = parse_field(ss, line), d = parse_field(ss, line);
  return QuadTower(a, b, c, d);
}

std::string join_coefficients(const Poly<QuadTower>& p) {
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    out += (out.empty() ? "" : ", ") + std::string("x^") + std::to_string(k) + ": " + to_string(p.coefficients()[k]);
  }
  return out;
}

Poly<QuadTower> lift(const Poly<Rational>& p) {
  std::vector<QuadTower> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return Poly<QuadTower>(QuadTower(), std::move(c));
}

Poly<QuadTower> conjugate(const Poly<QuadTower>& p, int s2, int s3) {
  std::vector<QuadTower> c;
  for (const auto& x : p.coefficients()) c.push_back(galois_conjugate(x, s2, s3));
  return Poly<QuadTower>(QuadTower(), std::move(c));
}

}  // namespace

UnitarizedRepresentation weyl_unitarize(const Partition& lambda) {
  validate_partition(lambda);
  unsigned n = 0;
  for (auto part : lambda) n += part;
  if (n < 1 || n > kMaxUnitaryDegree) {
    throw std::invalid_argument("unitary transforms need 1 <= n <= " + std::to_string(kMaxUnitaryDegree));
  }
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const SpechtRepresentation rep(lambda);
  std::vector<Eigen::MatrixXd> rho;
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(d, d);
  for (const auto& sigma : g.elements()) {
    rho.push_back(to_eigen(rep.matrix(sigma)));
    P += rho.back() * rho.back().transpose();
  }
  P /= static_cast<double>(g.order());
  P = (P + P.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(P);
  if (solver.info() != Eigen::Success) throw std::runtime_error("weyl_unitarize: eigendecomposition failed");
  if (solver.eigenvalues().minCoeff() < 1e-12) {
    throw std::runtime_error("weyl_unitarize: P is not positive definite for " + to_string(lambda));
  }
  const Eigen::MatrixXd& M = solver.eigenvectors();
  UnitarizedRepresentation out;
  out.shape = lambda;
  out.P = P;
  out.Q = M * solver.eigenvalues().cwiseSqrt().asDiagonal() * M.transpose();
  const Eigen::MatrixXd Qinv = M * solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * M.transpose();
  for (const auto& r : rho) {
    out.tau.push_back(Qinv * r * out.Q);
    out.defect = std::max(out.defect, orthogonality_defect(out.tau.back()));
  }
  return out;
}

UnitaryDftReport unitary_sn_dft(unsigned n) {
  if (n < 1 || n > kMaxUnitaryDegree) {
    throw std::invalid_argument("unitary transforms need 1 <= n <= " + std::to_string(kMaxUnitaryDegree));
  }
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const auto size = static_cast<Eigen::Index>(g.order());
  UnitaryDftReport out;
  out.n = n;
  out.U = Eigen::MatrixXcd::Zero(size, size);
  Eigen::Index row = 0;
  for (const auto& lambda : partitions(n)) {
    out.representations.push_back(weyl_unitarize(lambda));
    const auto& rep = out.representations.back();
    const auto d = rep.tau.front().rows();
    const double scale = std::sqrt(static_cast<double>(d) / static_cast<double>(g.order()));
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j, ++row) {
        for (Eigen::Index a = 0; a < size; ++a) out.U(row, a) = scale * rep.tau[a](i, j);
      }
    }
  }
  out.defect = unitarity_defect(out.U);
  out.eigenvalues = eig_unit_complex(out.U);
  return out;
}

N3Fixture load_n3_fixture(const std::filesystem::path& path_in) {
  const auto path = path_in.empty() ? data_dir() / "unitary_s3_fixture.txt" : path_in;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  std::vector<std::vector<QuadTower>> u(6, std::vector<QuadTower>(6));
  std::vector<bool> seen(36, false);
  std::vector<QuadTower> f(7);
  std::vector<Rational> g(25, Rational(0));
  N3Fixture out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "U") {
      std::size_t i = 0, j = 0;
      if (!(ss >> i >> j) || i >= 6 || j >= 6) throw std::runtime_error("fixture: bad index in line '" + line + "'");
      u[i][j] = parse_tower(ss, line);
      seen[i * 6 + j] = true;
    } else if (key == "f") {
      std::size_t k = 0;
      if (!(ss >> k) || k > 6) throw std::runtime_error("fixture: bad power in line '" + line + "'");
      f[k] = parse_tower(ss, line);
    } else if (key == "g") {
      std::size_t k = 0;
      if (!(ss >> k) || k > 24) throw std::runtime_error("fixture: bad power in line '" + line + "'");
      g[k] = parse_field(ss, line);
    } else if (key == "eig") {
      double re = 0, im = 0;
      if (!(ss >> re >> im)) throw std::runtime_error("fixture: bad eigenvalue in line '" + line + "'");
      out.eigenvalues.emplace_back(re, im);
    } else {
      throw std::runtime_error("fixture: unknown record '" + key + "'");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw std::runtime_error("fixture: incomplete matrix");
  if (out.eigenvalues.size() != 6) throw std::runtime_error("fixture: expected six eigenvalues");
  out.U = Matrix<QuadTower>::from_rows(QuadTower(), u);
  out.f = Poly<QuadTower>(QuadTower(), f);
  out.g = Poly<Rational>(Rational(0), g);
  return out;
}

bool N3FixtureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

N3FixtureReport verify_n3_fixture(const N3Fixture& fx) {
  N3FixtureReport r;

  const bool orthogonal = (fx.U * fx.U.transpose()).is_identity();
  r.checks.push_back({"orthogonal", orthogonal, orthogonal ? "U*U^T = I exactly" : "U*U^T != I"});

  r.char_poly = char_poly(fx.U);
  const bool f_match = r.char_poly == fx.f;
  r.checks.push_back({"char_poly_equals_f", f_match,
                      f_match ? "all 7 coefficients equal" : "computed " + join_coefficients(r.char_poly)});

  const bool palin = is_palindromic(fx.f);
  r.checks.push_back({"f_palindromic", palin, palin ? "coefficients read the same reversed" : "not palindromic"});

  r.conjugate_product = Poly<QuadTower>::constant(QuadTower(), QuadTower(1));
  for (const auto& [s2, s3] : kGaloisSigns) r.conjugate_product = r.conjugate_product * conjugate(r.char_poly, s2, s3);
  const bool rational = std::all_of(r.conjugate_product.coefficients().begin(), r.conjugate_product.coefficients().end(),
                                    [](const QuadTower& x) { return x.is_rational(); });
  const Poly<QuadTower> g = lift(fx.g);
  const bool g_match = rational && r.conjugate_product == g;
  r.product_matches_g_of_minus_x = rational && r.conjugate_product == lift(negate_variable(fx.g));
  for (const auto& [s2, s3] : kGaloisSigns) r.conjugate_divides_g.push_back(divmod(g, conjugate(r.char_poly, s2, s3)).remainder.is_zero());
  std::string d_detail;
  if (g_match) {
    d_detail = "product of the four conjugates is rational and equals g";
  } else {
    std::size_t mismatches = 0, first = 0;
    for (std::size_t k = 0; k <= 24; ++k) {
      const QuadTower want = k < g.coefficients().size() ? g.coefficients()[k] : QuadTower();
      const QuadTower got = k < r.conjugate_product.coefficients().size() ? r.conjugate_product.coefficients()[k] : QuadTower();
      if (!(want == got)) {
        if (mismatches++ == 0) first = k;
      }
    }
    const QuadTower got_first =
        first < r.conjugate_product.coefficients().size() ? r.conjugate_product.coefficients()[first] : QuadTower();
    d_detail = std::string(rational ? "product is rational" : "product is not rational") + "; " + std::to_string(mismatches) +
               " of 25 coefficients differ from g (x^" + std::to_string(first) + ": computed " + to_string(got_first) +
               ", stored " + to_string(fx.g.coefficients()[first]) + ")";
    d_detail += r.product_matches_g_of_minus_x ? "; the product equals g(-x)" : "; the product is not g(-x) either";
    std::size_t dividing = 0;
    for (bool b : r.conjugate_divides_g) dividing += b;
    d_detail += "; " + std::to_string(dividing) + " of the 4 conjugates of f divide g";
  }
  r.checks.push_back({"conjugate_product_equals_g", g_match, d_detail});

  Eigen::MatrixXcd uf(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) uf(i, j) = to_double(fx.U(i, j));
  r.computed_eigenvalues = eig_unit_complex(uf);
  r.eigenvalue_error = match_error(fx.eigenvalues, r.computed_eigenvalues);
  std::vector<std::complex<double>> negated;
  for (const auto& z : fx.eigenvalues) negated.push_back(-z);
  r.negated_eigenvalue_error = match_error(negated, r.computed_eigenvalues);
  const bool eig_match = r.eigenvalue_error <= 1e-9;
  std::ostringstream e_detail;
  e_detail.precision(3);
  e_detail << "max distance " << r.eigenvalue_error;
  if (!eig_match) e_detail << "; against the negated stored values " << r.negated_eigenvalue_error;
  r.checks.push_back({"eigenvalues_match", eig_match, e_detail.str()});

  bool non_integer = false;
  std::string witness;
  if (rational) {
    for (std::size_t k = r.conjugate_product.coefficients().size(); k-- > 0;) {
      const Rational& c = r.conjugate_product.coefficients()[k][0];
      if (c.get_den() != 1) {
        non_integer = true;
        witness = "x^" + std::to_string(k) + " has coefficient " + to_string(c);
        break;
      }
    }
  }
  r.checks.push_back({"non_integer_coefficient", non_integer,
                      non_integer ? witness + ", so no eigenvalue is a root of unity"
                                  : (rational ? "all coefficients are integers" : "product is not rational")});
  return r;
}

}  // namespace mdft
