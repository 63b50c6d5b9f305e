#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropcay/commands.hpp"
#include "tropcay/errors.hpp"

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tropcay::SchemaError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tropcay;
  CLI::App app{"Exact tropical arrangements, subdivisions and Ricardian trade"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));

  std::string input;
  std::string output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input JSON document")->required();
    sub->add_option("-o,--output", output, "Write the report here instead of stdout");
  };

  cli::ArrangementOptions arr;
  auto* arrangement = app.add_subcommand("arrangement", "Arrangement polynomial, normal complex and dual cells");
  add_io(arrangement);
  arrangement->add_flag("--poly", arr.poly, "Polynomial terms");
  arrangement->add_flag("--cells", arr.cells, "Normal-complex cells");
  arrangement->add_flag("--dual", arr.dual, "Dual subdivision cells");

  std::string point;
  auto* cov = app.add_subcommand("covector", "Covector and coarse type of a point");
  add_io(cov);
  cov->add_option("--point", point, "Comma-separated coordinates")->required();

  auto* tconv = app.add_subcommand("tconv", "Bounded cells of the tropical polytope");
  add_io(tconv);

  auto* mixed = app.add_subcommand("mixed", "Mixed subdivision via the Cayley embedding");
  add_io(mixed);

  std::string wages;
  std::string prices;
  bool equilibrate = false;
  auto* ric = app.add_subcommand("ricardo", "Classify and equilibrate wage-price systems");
  add_io(ric);
  ric->add_option("--wages", wages, "Comma-separated log wages");
  ric->add_option("--prices", prices, "Comma-separated log prices");
  ric->add_flag("--equilibrate", equilibrate, "Also report the equilibrated system");

  std::string what = "arrangement";
  std::string out_file;
  auto* plot = app.add_subcommand("plot", "SVG drawing");
  plot->add_option("input", input, "Input JSON document")->required();
  plot->add_option("--what", what, "arrangement or mixed")->check(CLI::IsMember({"arrangement", "mixed"}));
  plot->add_option("--out", out_file, "SVG output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::Schema);
  }

  try {
    const io::InputDocument doc = io::load_input(input);
    if (plot->parsed()) {
      emit(cli::cmd_plot(doc, what == "mixed" ? cli::PlotKind::Mixed : cli::PlotKind::Arrangement), out_file);
      return 0;
    }
    io::Json report;
    if (arrangement->parsed()) {
      report = cli::cmd_arrangement(doc, arr);
    } else if (cov->parsed()) {
      report = cli::cmd_covector(doc, io::parse_point(point));
    } else if (tconv->parsed()) {
      report = cli::cmd_tconv(doc);
    } else if (mixed->parsed()) {
      report = cli::cmd_mixed(doc);
    } else {
      cli::RicardoOptions opts;
      if (!wages.empty()) opts.wages = io::parse_point(wages);
      if (!prices.empty()) opts.prices = io::parse_point(prices);
      opts.equilibrate = equilibrate;
      report = cli::cmd_ricardo(doc, opts);
    }
    emit(io::dump(report), output);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}
