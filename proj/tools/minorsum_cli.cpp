// minorsum: exact Pfaffian / minor-summation / simplex-integral toolkit.
//
// Exit codes: 0 success or agreement, 1 mathematical disagreement
// (falsification), 2 usage or guard error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorsum/matrix_json.hpp"
#include "minorsum/minorsum.hpp"

namespace {

using namespace minorsum;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

ExponentVector parse_exponents(const std::string& text) {
  std::vector<Rational> a;
  for (const std::string& part : split_commas(text)) a.push_back(parse_rational(part));
  return ExponentVector(std::move(a));
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> grid;
  for (const std::string& part : split_commas(text)) {
    Rational value = parse_rational(part);
    if (denominator(value) != 1 || value < 1)
      throw std::invalid_argument("grid entries must be positive integers");
    grid.push_back(numerator(value).convert_to<std::size_t>());
  }
  return grid;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

int cmd_verify(std::size_t n, std::size_t k, std::size_t trials, std::int64_t max_entry,
               std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (binomial(n, k) > kMaxBruteForceSubsets)
    throw resource_limit_error("C(n,k) exceeds the brute-force guard of 10^6 subsets");
  bool all_match = true;
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = seed + t;
    SeededRng rng(trial_seed);
    DenseMatrix<Rational> c = random_integer_matrix(rng, n, k, max_entry);
    MinorSumReport<Rational> okada = minor_sum_okada(c);
    MinorSumReport<Rational> brute = minor_sum_bruteforce(c);
    bool match = okada.value == brute.value;
    all_match = all_match && match;
    nlohmann::ordered_json line{{"n", n},
                                {"k", k},
                                {"seed", trial_seed},
                                {"okada", format_rational(okada.value)},
                                {"brute", format_rational(brute.value)},
                                {"match", match}};
    std::cout << line.dump() << "\n";
  }
  return all_match ? 0 : 1;
}

int cmd_integral(const std::string& exponents_text, bool check) {
  ExponentVector a = parse_exponents(exponents_text);
  Rational product = rhs_product(a);
  std::cout << format_rational(product) << "\n";
  if (!check) return 0;
  Rational pfaffian_value = lhs_pfaffian(a);
  bool agree = pfaffian_value == product;
  if (a.size() <= kMaxIteratedOracleK)
    agree = agree && iterated_integral_oracle(a) == product;
  if (!agree) {
    std::cerr << "disagreement: pfaffian route gives " << format_rational(pfaffian_value)
              << ", product formula gives " << format_rational(product) << "\n";
    return 1;
  }
  return 0;
}

int cmd_converge(const std::string& exponents_text, const std::string& grid_text,
                 const std::string& format) {
  ExponentVector a = parse_exponents(exponents_text);
  std::vector<std::size_t> grid = parse_grid(grid_text);
  std::vector<ConvergenceRow> rows = convergence_table(a, grid);
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const ConvergenceRow& row : rows) {
      out.push_back(nlohmann::ordered_json{{"n", row.n},
                                           {"approx", row.approx},
                                           {"exact", format_rational(row.exact)},
                                           {"abs_error", row.abs_error}});
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n\tapprox\texact\tabs_error\n";
    for (const ConvergenceRow& row : rows) {
      std::cout << row.n << "\t" << format_double(row.approx) << "\t"
                << format_rational(row.exact) << "\t" << format_double(row.abs_error) << "\n";
    }
  }
  return 0;
}

int cmd_pfaffian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in);
  DenseMatrix<Rational> m = read_matrix_json(doc);
  if (m.rows() != m.cols()) throw std::invalid_argument("Pfaffian input must be square");
  if (m.rows() % 2 != 0)
    throw std::invalid_argument(
        "the Pfaffian is defined only for even-dimensional skew-symmetric matrices; got dim " +
        std::to_string(m.rows()));
  SkewMatrix<Rational> s = SkewMatrix<Rational>::from_full(m.rows(), m.entries());
  std::cout << format_rational(pfaffian_eliminate(s)) << "\n";
  return 0;
}

int cmd_symbolic(std::size_t k, bool show) {
  if (k < 1 || k > kMaxSymbolicK)
    throw std::invalid_argument("k must lie in 1..5 for the symbolic checker");
  SymbolicPfaffianMatrix m = build_symbolic_matrix(k);
  RationalFunction pf = symbolic_pfaffian(m);
  RationalFunction expected(vandermonde_difference_product(k), exponent_sum_product(k));
  bool identity_ok = ratfun_equal(pf, expected);
  bool reduction_ok = k < 2 || reduction_check(k);
  if (show || !identity_ok || !reduction_ok) {
    std::cout << "matrix (dim " << m.dim() << ", upper triangle):\n";
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = i + 1; j < m.dim(); ++j)
        std::cout << "  (" << i << "," << j << ") = " << m.matrix().at(i, j).to_string() << "\n";
    std::cout << "pfaffian = " << pf.to_string() << "\n";
    std::cout << "expected = " << expected.to_string() << "\n";
  }
  if (!identity_ok || !reduction_ok) {
    std::cout << "MISMATCH k=" << k << (identity_ok ? "" : " [identity]")
              << (reduction_ok ? "" : " [reduction]") << "\n";
    return 1;
  }
  std::cout << "OK k=" << k << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Pfaffians, Okada minor summation, and ordered-simplex integrals"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string format = "tsv";
  app.add_option("--seed", seed, "PRNG seed (std::mt19937_64; identical seeds replay runs)");
  app.add_option("--format", format, "output format for tabular commands")
      ->check(CLI::IsMember({"json", "tsv"}));

  auto* verify = app.add_subcommand(
      "verify", "random-matrix comparison of the Pfaffian and brute-force minor sums");
  verify->fallthrough();
  std::size_t verify_n = 6, verify_k = 3, trials = 100;
  std::int64_t max_entry = 5;
  verify->add_option("--n", verify_n, "matrix rows")->required();
  verify->add_option("--k", verify_k, "matrix columns")->required();
  verify->add_option("--trials", trials, "number of random matrices");
  verify->add_option("--max-entry", max_entry, "entries drawn uniformly from [-max,max]")
      ->check(CLI::PositiveNumber);

  auto* integral = app.add_subcommand(
      "integral", "exact ordered-simplex integral of det(x_i^(a_j-1)) via the product formula");
  integral->fallthrough();
  std::string integral_exponents;
  bool check = false;
  integral->add_option("--exponents", integral_exponents, "comma-separated positive rationals")
      ->required();
  integral->add_flag("--check", check,
                     "also evaluate the Pfaffian route and the iterated-integration oracle");

  auto* converge = app.add_subcommand(
      "converge", "discretized minor sums against the exact integral over a grid of n");
  converge->fallthrough();
  std::string converge_exponents, grid_text;
  converge->add_option("--exponents", converge_exponents, "comma-separated positive rationals")
      ->required();
  converge->add_option("--grid", grid_text, "comma-separated increasing grid sizes")->required();

  auto* pfaffian = app.add_subcommand("pfaffian", "exact Pfaffian of a skew matrix JSON file");
  pfaffian->fallthrough();
  std::string matrix_path;
  pfaffian->add_option("file", matrix_path, "matrix JSON path")->required();

  auto* symbolic = app.add_subcommand(
      "symbolic", "verify the closed-form identity and its induction step over the function field");
  symbolic->fallthrough();
  std::size_t symbolic_k = 2;
  bool show = false;
  symbolic->add_option("--k", symbolic_k, "number of exponent variables (1..5)")->required();
  symbolic->add_flag("--show", show, "print the symbolic matrices and Pfaffian");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(verify_n, verify_k, trials, max_entry, seed);
    if (app.got_subcommand(integral)) return cmd_integral(integral_exponents, check);
    if (app.got_subcommand(converge)) return cmd_converge(converge_exponents, grid_text, format);
    if (app.got_subcommand(pfaffian)) return cmd_pfaffian(matrix_path);
    if (app.got_subcommand(symbolic)) return cmd_symbolic(symbolic_k, show);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
