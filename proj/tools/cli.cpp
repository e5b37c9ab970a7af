#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdft/cyclic.hpp"
#include "mdft/fixtures.hpp"
#include "mdft/group_algebra.hpp"
#include "mdft/linalg.hpp"
#include "mdft/number_theory.hpp"
#include "mdft/unitary.hpp"

namespace mdft::cli {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

json to_json(const Gf& x) {
  if (x.field().is_prime_field()) return x.encode();
  return to_string(x);
}

json to_json(const Rational& x) { return to_string(x); }

json to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(std::complex<double>(m(i, j))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Partition& lambda) { return json(std::vector<unsigned>(lambda.begin(), lambda.end())); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), [](unsigned char c) { return std::isspace(c); }), cur.end());
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string read_input(const std::string& option, std::istream& in) {
  if (!option.empty() && option != "-") return option;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<Rational> parse_csv_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (auto& tok : split(text, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("input value '" + tok + "' is not an integer or rational");
    }
  }
  return out;
}

std::vector<Gf> parse_csv_field(const std::string& text, const GaloisField& field) {
  std::vector<Gf> out;
  for (const auto& r : parse_csv_rationals(text)) out.push_back(from_rational(field.zero(), r));
  return out;
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or rational strings");
}

// --pretty: scalars as "key: value", matrices as aligned grids.
bool is_scalar_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array()) return false;
    for (const auto& x : row)
      if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto entry = [&](const std::string& label, const json& x) {
    if (!x.is_structured()) {
      out << pad << label << ": " << scalar_text(x) << "\n";
    } else if (is_scalar_matrix(x)) {
      out << pad << label << ":\n";
      std::size_t width = 1;
      for (const auto& row : x)
        for (const auto& e : row) width = std::max(width, scalar_text(e).size());
      for (const auto& row : x) {
        out << pad << "  ";
        for (const auto& e : row) out << std::setw(static_cast<int>(width) + 1) << scalar_text(e);
        out << "\n";
      }
    } else if (x.is_array() && std::none_of(x.begin(), x.end(), [](const json& e) { return e.is_structured(); })) {
      out << pad << label << ": " << x.dump() << "\n";
    } else {
      out << pad << label << ":\n";
      render(x, out, indent + 2);
    }
  };
  if (v.is_object()) {
    for (const auto& [key, x] : v.items()) entry(key, x);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) entry("[" + std::to_string(i) + "]", v[i]);
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

struct Options {
  std::uint64_t seed = 0;
  bool pretty = false;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::int64_t alpha = 0;
  std::string input;
  std::string fixture;
  bool inverse = false;
  bool splitting_field = false;
  bool verify_fixture = false;
  bool force_extension = false;
  // Set by a command whose internal checks failed; the payload is still printed.
  bool verification_failed = false;
};

// ---------------------------------------------------------------------------
// Commands. Each returns the result payload.

json cmd_cyclic_dft(const Options& o, CLI::App& cmd, std::istream& in) {
  require(o.n >= 1, "N must be positive");
  require(is_prime(o.p), "p must be prime");
  require((o.p - 1) % o.n == 0,
          "N does not divide p-1 (N = " + std::to_string(o.n) + ", p-1 = " + std::to_string(o.p - 1) + ")");
  const GaloisField field = GaloisField::prime(o.p);
  const Gf alpha = cmd.count("--alpha") > 0 ? field.element(o.alpha) : nth_root_of_unity(field, o.n);
  const auto v = parse_csv_field(read_input(o.input, in), field);
  require(v.size() == o.n, "input has " + std::to_string(v.size()) + " values, expected N = " + std::to_string(o.n));
  if (o.inverse) {
    require(o.n % o.p != 0, "inverse transform requires p not to divide N");
    return json{{"alpha", to_json(alpha)}, {"signal", to_json(idft_root_of_unity(v, alpha))}};
  }
  return json{{"alpha", to_json(alpha)}, {"spectrum", to_json(dft_root_of_unity(v, alpha))}};
}

json cmd_factor_xn1(const Options& o) {
  require(o.n >= 1, "N must be positive");
  require(is_prime(o.p), "p must be prime");
  const auto fac = factor_xn_minus_1(o.n, o.p, o.seed);
  json factors = json::array();
  for (std::size_t i = 0; i < fac.factorization.factors.size(); ++i) {
    const std::uint64_t d = fac.divisor_of_factor[i];
    const auto block = std::find_if(fac.blocks.begin(), fac.blocks.end(), [&](const auto& b) { return b.d == d; });
    factors.push_back({{"factor", to_string(fac.factorization.factors[i].factor)},
                       {"multiplicity", fac.factorization.factors[i].multiplicity},
                       {"d", d},
                       {"f", block->residue_degree},
                       {"g", block->factor_count}});
  }
  json out{{"n", o.n}, {"p", o.p}, {"s", fac.s}, {"ell", fac.ell}, {"factors", factors}};
  if (o.splitting_field) {
    const std::uint64_t degree = fac.ell == 1 ? 1 : multiplicative_order_mod(o.p % fac.ell, fac.ell);
    out["splitting_field_degree"] = degree;
  }
  return out;
}

json cmd_crt_dft(const Options& o, std::istream& in) {
  require(o.n >= 1, "N must be positive");
  require(is_prime(o.p), "p must be prime");
  const CrtTransform crt(o.n, o.p, o.splitting_field, o.seed);
  const std::string text = read_input(o.input, in);
  json moduli = json::array();
  for (const auto& m : crt.moduli()) moduli.push_back(to_string(m));
  json out{{"field", crt.field().describe()}, {"moduli", moduli}};
  if (o.inverse) {
    // Components separated by ';', coefficients by ','.
    std::vector<std::vector<Gf>> spectrum;
    for (const auto& part : split(text, ';')) spectrum.push_back(parse_csv_field(part, crt.field()));
    out["signal"] = to_json(crt.inverse(spectrum));
  } else {
    json residues = json::array();
    for (const auto& r : crt.forward(parse_csv_field(text, crt.field()))) residues.push_back(to_json(r));
    out["residues"] = residues;
  }
  return out;
}

json cmd_unitary_cyclic(const Options& o) {
  const auto r = unitary_cyclic_dft_ff(o.n, o.q, o.force_extension);
  return json{{"field", r.field.describe()},
              {"m", r.m},
              {"alpha", to_json(r.alpha)},
              {"sqrt_n", to_json(r.sqrt_n)},
              {"sqrt_via_extension", r.sqrt_via_extension},
              {"q_is_minus_one_mod_n", r.q_is_minus_one_mod_n},
              {"conjugation_is_involution", r.conjugation_is_involution},
              {"kronecker_structure", r.kronecker_structure},
              {"normalization", to_json(r.normalization)},
              {"unitary", r.unitary},
              {"order_four", r.order_four},
              {"eigenvalues_fourth_roots", r.eigenvalues_fourth_roots},
              {"matrix", to_json(r.u)}};
}

unsigned sn_degree(const Options& o, unsigned max_n) {
  require(o.n >= 1 && o.n <= max_n, "this operation needs 1 <= n <= " + std::to_string(max_n));
  return static_cast<unsigned>(o.n);
}

json cmd_sn_dft(const Options& o, std::istream& in) {
  const unsigned n = sn_degree(o, kMaxTransformDegree);
  const auto values = parse_csv_rationals(read_input(o.input, in));
  require(values.size() == SymmetricGroup::get(n).order(),
          "input has " + std::to_string(values.size()) + " values, expected n! = " + std::to_string(SymmetricGroup::get(n).order()));
  const auto parts = partitions(n);
  json out = json::array();
  if (o.p != 0) {
    require(is_prime(o.p), "p must be prime");
    const Gf zero = GaloisField::prime(o.p).zero();
    std::vector<Gf> f;
    for (const auto& x : values) f.push_back(from_rational(zero, x));
    const auto coeffs = sn_dft(f);
    for (std::size_t k = 0; k < parts.size(); ++k) out.push_back({{"partition", to_json(parts[k])}, {"matrix", to_json(coeffs[k])}});
  } else {
    const auto coeffs = sn_dft(values);
    for (std::size_t k = 0; k < parts.size(); ++k) out.push_back({{"partition", to_json(parts[k])}, {"matrix", to_json(coeffs[k])}});
  }
  return out;
}

// Input: JSON list of square matrices (rows of integers or "a/b" strings), or
// of {"partition", "matrix"} objects as printed by `sn dft`.
json cmd_sn_idft(const Options& o, std::istream& in) {
  const unsigned n = sn_degree(o, kMaxTransformDegree);
  json data;
  try {
    data = json::parse(read_input(o.input, in));
  } catch (const json::parse_error&) {
    throw std::invalid_argument("idft input must be a JSON list of matrices");
  }
  require(data.is_array(), "idft input must be a JSON list of matrices");
  std::vector<Matrix<Rational>> coeffs;
  for (const auto& item : data) {
    const json& m = item.is_object() ? item.at("matrix") : item;
    require(m.is_array() && !m.empty(), "each coefficient must be a non-empty matrix");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : m) {
      require(row.is_array(), "matrix rows must be arrays");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(json_rational(x));
      rows.push_back(std::move(r));
    }
    coeffs.push_back(Matrix<Rational>::from_rows(Rational(0), rows));
  }
  if (o.p != 0) {
    require(is_prime(o.p), "p must be prime");
    const Gf zero = GaloisField::prime(o.p).zero();
    std::vector<Matrix<Gf>> c;
    for (const auto& m : coeffs) c.push_back(convert_matrix(m, zero));
    return to_json(sn_idft(c, n));
  }
  return to_json(sn_idft(coeffs, n));
}

json cmd_sn_unitary(Options& o) {
  if (o.verify_fixture) {
    require(o.n == 3 || o.n == 0, "--verify-fixture applies to n = 3");
    const auto r = verify_n3_fixture(load_n3_fixture());
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json out{{"checks", checks},
             {"all_passed", r.all_passed()},
             {"char_poly", to_string(r.char_poly)},
             {"conjugate_product", to_string(r.conjugate_product)},
             {"product_matches_g_of_minus_x", r.product_matches_g_of_minus_x},
             {"eigenvalue_error", r.eigenvalue_error},
             {"negated_eigenvalue_error", r.negated_eigenvalue_error},
             {"computed_eigenvalues", to_json(r.computed_eigenvalues)}};
    o.verification_failed = !r.all_passed();
    return out;
  }
  const unsigned n = sn_degree(o, kMaxUnitaryDegree);
  const auto r = unitary_sn_dft(n);
  json reps = json::array();
  for (const auto& rep : r.representations) reps.push_back({{"partition", to_json(rep.shape)}, {"defect", rep.defect}});
  return json{{"defect", r.defect}, {"eigenvalues", to_json(r.eigenvalues)}, {"representations", reps}, {"matrix", to_json(r.U)}};
}

std::pair<std::uint64_t, unsigned> fixture_parameters(const std::string& name) {
  if (name == "paper-2-3") return {2, 3};
  if (name == "paper-3-4") return {3, 4};
  throw std::invalid_argument("unknown fixture '" + name + "' (expected paper-2-3 or paper-3-4)");
}

json cmd_sn_modular_dft(const Options& o) {
  if (!o.fixture.empty()) {
    const auto [p, n] = fixture_parameters(o.fixture);
    return json{{"p", p}, {"n", n}, {"matrix", to_json(reference_modular_dft(p, n))}};
  }
  const unsigned n = sn_degree(o, kMaxModularDegree);
  require(is_prime(o.p), "p must be prime");
  const auto dft = modular_dft_matrix(o.p, n, o.seed);
  json layout = json::array();
  for (const auto& b : dft.layout) layout.push_back({{"start", b.start}, {"size", b.size}});
  json idem = json::array();
  for (const auto& e : dft.idempotents.idempotents) idem.push_back(e.to_map());
  json elements = json::array();
  for (const auto& g : SymmetricGroup::get(n).elements()) elements.push_back(g.to_string());
  return json{{"elements", elements}, {"layout", layout},         {"idempotents", idem},
              {"basis", to_json(dft.basis)}, {"transform", to_json(dft.transform)}};
}

json cmd_sn_idempotents(Options& o) {
  const unsigned n = sn_degree(o, kMaxModularDegree);
  require(is_prime(o.p), "p must be prime");
  const auto set = central_idempotents(n, o.p, o.seed);
  const auto ax = check_idempotent_axioms(set);
  json items = json::array();
  for (std::size_t i = 0; i < set.idempotents.size(); ++i)
    items.push_back({{"block_dimension", set.block_dimensions[i]}, {"coefficients", set.idempotents[i].to_map()}});
  json out{{"count", set.idempotents.size()},
           {"idempotents", items},
           {"axioms",
            {{"central", ax.central},
             {"idempotent", ax.idempotent},
             {"orthogonal", ax.orthogonal},
             {"complete", ax.complete},
             {"primitive", ax.primitive}}}};
  o.verification_failed = !ax.all();
  return out;
}

json cmd_sn_matrix_order(const Options& o) {
  auto order_json = [&](const Matrix<Gf>& m) -> json {
    const auto order = matrix_order_ff(m, o.seed);
    return order ? json(*order) : json(nullptr);
  };
  if (!o.fixture.empty()) {
    const auto [p, n] = fixture_parameters(o.fixture);
    return json{{"fixture", o.fixture}, {"p", p}, {"n", n}, {"order", order_json(reference_modular_dft(p, n))}};
  }
  const unsigned n = sn_degree(o, kMaxModularDegree);
  require(is_prime(o.p), "p must be prime");
  const auto dft = modular_dft_matrix(o.p, n, o.seed);
  return json{{"basis_order", order_json(dft.basis)}, {"transform_order", order_json(dft.transform)}};
}

json parameters_of(const CLI::App& cmd) {
  json params = json::object();
  for (const CLI::Option* opt : cmd.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const std::string name = opt->get_name().substr(2);
    if (opt->get_expected_min() == 0) {
      params[name] = true;
    } else {
      const std::string& v = opt->results().back();
      const bool digits = !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); });
      params[name] = digits && v.size() < 19 ? json(std::stoull(v)) : json(v);
    }
  }
  return params;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Discrete Fourier transforms over finite fields and symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for randomized splitting (default 0)");
  app.add_flag("--pretty", o.pretty, "Human-readable rendering instead of JSON");

  auto* cyclic = app.add_subcommand("cyclic-dft", "DFT of length N over F_p with a root of unity");
  cyclic->add_option("--n", o.n, "Length N")->required();
  cyclic->add_option("--p", o.p, "Prime p with N | p-1")->required();
  cyclic->add_option("--alpha", o.alpha, "Primitive N-th root of unity (default: derived from the least primitive root)");
  cyclic->add_option("--input", o.input, "Comma-separated values, or - for stdin");
  cyclic->add_flag("--inverse", o.inverse, "Inverse transform");

  auto* fxn1 = app.add_subcommand("factor-xn1", "Factor x^N - 1 over F_p");
  fxn1->add_option("--n", o.n, "N")->required();
  fxn1->add_option("--p", o.p, "Prime p")->required();
  fxn1->add_flag("--splitting-field", o.splitting_field, "Also report the degree of the splitting field");

  auto* crt = app.add_subcommand("crt-dft", "Chinese-remainder transform of F_p[x]/(x^N - 1)");
  crt->add_option("--n", o.n, "N")->required();
  crt->add_option("--p", o.p, "Prime p")->required();
  crt->add_option("--input", o.input, "Signal as CSV; for --inverse, residue vectors separated by ';'");
  crt->add_flag("--inverse", o.inverse, "Reconstruct the signal from residues");
  crt->add_flag("--splitting-field", o.splitting_field, "Factor over the splitting field of x^l - 1");

  auto* ucyc = app.add_subcommand("unitary-cyclic", "Unitary cyclic DFT over F_{q^2}");
  ucyc->add_option("--n", o.n, "N")->required();
  ucyc->add_option("--q", o.q, "Prime power q")->required();
  ucyc->add_flag("--force-extension", o.force_extension, "Take sqrt(N) in the quadratic extension");

  auto* sn = app.add_subcommand("sn", "Transforms of the symmetric group S_n");
  sn->require_subcommand(1);
  sn->fallthrough();
  auto add_sn = [&](const std::string& name, const std::string& help) {
    auto* c = sn->add_subcommand(name, help);
    c->add_option("--n", o.n, "Degree n");
    c->add_option("--p", o.p, "Prime characteristic");
    return c;
  };
  auto* sn_dft_cmd = add_sn("dft", "Fourier coefficients over Q, or over F_p with --p");
  sn_dft_cmd->add_option("--input", o.input, "n! comma-separated values in group order, or - for stdin");
  auto* sn_idft_cmd = add_sn("idft", "Inverse transform");
  sn_idft_cmd->add_option("--input", o.input, "JSON list of coefficient matrices, or - for stdin");
  auto* sn_unitary = add_sn("unitary", "Unitary DFT over complex floats");
  sn_unitary->add_flag("--verify-fixture", o.verify_fixture, "Check the stored exact S_3 unitary DFT");
  auto* sn_modular = add_sn("modular-dft", "Block change-of-basis matrix of F_p[S_n]");
  sn_modular->add_option("--fixture", o.fixture, "Print a stored reference matrix: paper-2-3 or paper-3-4");
  add_sn("idempotents", "Central primitive orthogonal idempotents of F_p[S_n]");
  auto* sn_order = add_sn("matrix-order", "Multiplicative order of the modular DFT matrix");
  sn_order->add_option("--fixture", o.fixture, "Use a stored reference matrix: paper-2-3 or paper-3-4");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  const CLI::App* leaf = nullptr;
  std::string name;
  const auto start = std::chrono::steady_clock::now();
  json result;
  try {
    if (cyclic->parsed()) {
      leaf = cyclic;
      result = cmd_cyclic_dft(o, *cyclic, in);
    } else if (fxn1->parsed()) {
      leaf = fxn1;
      result = cmd_factor_xn1(o);
    } else if (crt->parsed()) {
      leaf = crt;
      result = cmd_crt_dft(o, in);
    } else if (ucyc->parsed()) {
      leaf = ucyc;
      result = cmd_unitary_cyclic(o);
    } else {
      leaf = sn->get_subcommands().front();
      const std::string& sub = leaf->get_name();
      if (sub == "dft") result = cmd_sn_dft(o, in);
      else if (sub == "idft") result = cmd_sn_idft(o, in);
      else if (sub == "unitary") result = cmd_sn_unitary(o);
      else if (sub == "modular-dft") result = cmd_sn_modular_dft(o);
      else if (sub == "idempotents") result = cmd_sn_idempotents(o);
      else result = cmd_sn_matrix_order(o);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  name = leaf->get_name();
  json params = parameters_of(*leaf);
  if (leaf->get_parent() == sn) name = "sn " + name;
  params["seed"] = o.seed;
  const json envelope{{"command", name}, {"parameters", params}, {"result", result}, {"timing_ms", ms}};
  if (o.pretty) {
    render(envelope, out, 0);
  } else {
    out << envelope.dump() << "\n";
  }
  if (o.verification_failed) {
    err << "verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace mdft::cli
