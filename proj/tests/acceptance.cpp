// One line per acceptance criterion. Usage: acceptance <cli> <V.json>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "properties.hpp"

using namespace tropcay;
using namespace tropcay::testing;

namespace {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

int failures = 0;

void report(int number, bool pass, const std::string& what, const std::string& detail = "") {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  failures += !pass;
}

Pairs one_based(std::initializer_list<std::pair<std::size_t, std::size_t>> ps) {
  Pairs out;
  for (auto [i, k] : ps) out.insert({i - 1, k - 1});
  return out;
}

// Frozen term list: max(4x1, 3x1+x2, 3x1+x3, 2x1+2x2-1, 2x1+x2+x3, 2x1+2x3-1,
// x1+3x2-4, x1+2x2+x3-2, x1+x2+2x3-1, x1+3x3-3, 4x2-8, 3x2+x3-5, 2x2+2x3-4,
// x2+3x3-4, 4x3-6).
TropPolynomial golden_polynomial() {
  return make_poly({{{4, 0, 0}, 0},  {{3, 1, 0}, 0},  {{3, 0, 1}, 0},  {{2, 2, 0}, -1}, {{2, 1, 1}, 0},
                    {{2, 0, 2}, -1}, {{1, 3, 0}, -4}, {{1, 2, 1}, -2}, {{1, 1, 2}, -1}, {{1, 0, 3}, -3},
                    {{0, 4, 0}, -8}, {{0, 3, 1}, -5}, {{0, 2, 2}, -4}, {{0, 1, 3}, -4}, {{0, 0, 4}, -6}},
                   Orientation::Max, 3);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
void guarded(int number, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(number, false, what, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <V.json>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string v_json = argv[2];
  const TropMatrix v = example_matrix();
  const auto start = std::chrono::steady_clock::now();

  guarded(1, "arrangement polynomial equals the 15 listed terms", [&] {
    const auto f = arrangement_poly(v);
    report(1, f == golden_polynomial() && f.size() == 15, "arrangement polynomial equals the 15 listed terms");
  });

  guarded(2, "covector, coarse type and evaluation at the sample points", [&] {
    const Covector cv = covector(v, vec({0, 1, 3}));
    const bool pairs_ok = cv.pairs == one_based({{3, 1}, {3, 2}, {1, 3}, {3, 3}, {2, 4}, {3, 4}});
    const bool coarse_ok = coarse_type(covector(v, vec({0, 2, 0}))) == CoarseType{2, 2, 0};
    const auto at = eval(golden_polynomial(), vec({0, 2, 0}));
    const bool eval_ok = at.value == 3 && at.argopt == std::vector<ExponentVector>{{2, 2, 0}};
    report(2, pairs_ok && coarse_ok && eval_ok, "covector, coarse type and evaluation at the sample points");
  });

  guarded(3, "separate-variables product: 81 terms, value 6 with 4 optimal terms", [&] {
    const auto w = separate_variables_product(v);
    RationalVector y(12);
    const long level[3] = {0, 1, 3};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 4; ++k) y[separate_variable_index(i, k, 4)] = level[i];
    const auto at = eval(w, y);
    Pairs support;
    for (const auto& e : at.argopt)
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j]) support.insert({j / 4, j % 4});
      }
    const bool ok = w.size() == 81 && at.value == 6 && at.argopt.size() == 4 &&
                    support == one_based({{3, 1}, {3, 2}, {1, 3}, {3, 3}, {2, 4}, {3, 4}}) &&
                    identify_separate_variables(w, 3, 4) == golden_polynomial();
    report(3, ok, "separate-variables product: 81 terms, value 6 with 4 optimal terms");
  });

  guarded(4, "dual cell of (0,1,3)", [&] {
    const auto cell = cell_of_point(arrangement_poly(v), vec({0, 1, 3}));
    report(4, cell == std::vector<ExponentVector>{{0, 0, 4}, {0, 1, 3}, {1, 0, 3}, {1, 1, 2}}, "dual cell of (0,1,3)");
  });

  guarded(5, "bounded cells: 4 maximal, three of dimension 2 and one of dimension 1", [&] {
    const auto maximal = tconv_bounded_cells(v).maximal_cells();
    std::map<std::size_t, int> dims;
    for (const auto* c : maximal) ++dims[c->dimension];
    report(5, maximal.size() == 4 && dims[2] == 3 && dims[1] == 1 && dims.size() == 2,
           "bounded cells: 4 maximal, three of dimension 2 and one of dimension 1");
  });

  guarded(6, "wage-price classification, competitive pairs and equilibration", [&] {
    const ricardo::Economy e(v);
    const ricardo::WagePriceSystem s{vec({5, 5, 1, 2}), ricardo::prices_from_wages(e, vec({5, 5, 1, 2}))};
    const auto c = ricardo::classify(e, s);
    const auto pairs = ricardo::competitive_pairs(e, s);
    const auto eq = ricardo::equilibrate(e, vec({5, 5, 1, 2}));
    const auto ce = ricardo::classify(e, eq);
    const bool ok = s.log_prices == vec({1, 2, 4}) && c.sharing && !c.covering &&
                    pairs == one_based({{1, 3}, {2, 4}, {3, 3}, {3, 4}}) && eq.log_wages == vec({4, 3, 1, 2}) &&
                    eq.log_prices == vec({1, 2, 4}) && ce.sharing && ce.covering;
    report(6, ok, "wage-price classification, competitive pairs and equilibration");
  });

  guarded(7, "Cayley trick on random instances", [&] {
    const SuiteResult r = cayley_suite(120, 7001);
    report(7, r.instances >= 100 && r.failures == 0, "Cayley trick on random instances",
           std::to_string(r.instances) + " instances, " + std::to_string(r.failures) + " failures" +
               (r.failures ? "; first: " + r.first_failure : ""));
  });

  guarded(8, "regular subdivisions against the facet oracle", [&] {
    const SuiteResult r = hull_suite(300, 8001);
    report(8, r.instances >= 200 && r.failures == 0, "regular subdivisions against the facet oracle",
           std::to_string(r.instances) + " configurations, " + std::to_string(r.failures) + " failures" +
               (r.failures ? "; first: " + r.first_failure : ""));
  });

  guarded(9, "operator properties on sampled points", [&] {
    const auto r = operator_suite(500, 9001);
    int fail_count = 0;
    int min_instances = 1 << 30;
    std::string detail;
    for (const auto& [name, s] : std::vector<std::pair<std::string, SuiteResult>>{{"semiring", r.semiring},
                                                                                  {"idempotence", r.idempotence},
                                                                                  {"membership", r.membership},
                                                                                  {"product", r.product},
                                                                                  {"vanishing", r.vanishing},
                                                                                  {"updown", r.updown}}) {
      fail_count += s.failures;
      min_instances = std::min(min_instances, s.instances);
      detail += name + " " + std::to_string(s.instances) + "/" + std::to_string(s.failures) + " ";
      if (s.failures) detail += "(" + s.first_failure + ") ";
    }
    report(9, min_instances >= 500 && fail_count == 0, "operator properties on sampled points",
           detail + "samples/failures");
  });

  guarded(10, "repeated CLI runs are byte-identical", [&] {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("tropcay_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"arrangement", "arrangement " + v_json},
        {"covector", "covector " + v_json + " --point 0,1,3"},
        {"tconv", "tconv " + v_json},
        {"mixed", "mixed " + v_json},
        {"plot_arrangement", "plot " + v_json + " --what arrangement --out "},
        {"plot_mixed", "plot " + v_json + " --what mixed --out "},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, args] : commands) {
      std::vector<std::string> outputs;
      for (const char* threads : {"1", "4", "4"}) {
        const fs::path out = dir / (name + "_" + threads + "_" + std::to_string(outputs.size()));
        setenv("TROPCAY_THREADS", threads, 1);
        const bool to_file = args.back() == ' ';
        const std::string cmd = "\"" + cli + "\" " + args + (to_file ? out.string() : " > " + out.string());
        const int status = std::system(cmd.c_str());
        if (status != 0) {
          ok = false;
          detail += name + " exited with " + std::to_string(status) + "; ";
        }
        outputs.push_back(slurp(out));
      }
      if (outputs[0].empty() || outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
        ok = false;
        detail += name + " differs; ";
      }
    }
    unsetenv("TROPCAY_THREADS");
    fs::remove_all(dir);
    report(10, ok, "repeated CLI runs are byte-identical", detail.empty() ? "6 commands x 3 runs" : detail);
  });

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << seconds << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
