#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fulltree/cli.hpp"

namespace {

const std::map<std::string, fulltree::Algo> kAlgos{
    {"naive", fulltree::Algo::naive},
    {"typed", fulltree::Algo::typed},
    {"structural", fulltree::Algo::structural},
};

const std::map<std::string, fulltree::TreeFormat> kFormats{
    {"sexpr", fulltree::TreeFormat::sexpr},
    {"json", fulltree::TreeFormat::json},
    {"dot", fulltree::TreeFormat::dot},
};

const std::map<std::string, fulltree::InputFormat> kInputs{
    {"lines", fulltree::InputFormat::lines},
    {"csv-row", fulltree::InputFormat::csv_row},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balance label lists into full binary trees"};

  fulltree::Options options;
  std::string file;
  app.add_option("--algo", options.algo, "Balancer tier")
      ->transform(CLI::CheckedTransformer(kAlgos, CLI::ignore_case))
      ->default_str("structural");
  app.add_option("--format", options.format, "Tree output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("sexpr");
  app.add_option("--input", options.input, "Input layout")
      ->transform(CLI::CheckedTransformer(kInputs, CLI::ignore_case))
      ->default_str("lines");
  app.add_flag("--stats", options.stats, "Print size and height statistics instead of the tree");
  app.add_flag("--check", options.check, "Cross-check all three balancers on the input");
  app.add_option("file", file, "Label file (stdin when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::string bytes;
  if (file.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    bytes = buffer.str();
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "input error: cannot open " << file << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    bytes = buffer.str();
  }

  return fulltree::run_cli(options, bytes, std::cout, std::cerr);
}
