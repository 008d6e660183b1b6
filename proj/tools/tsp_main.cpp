#include "cli_common.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Spanning trees and tours of planar point sets"};
  pav::cli::TspOpts o;
  pav::cli::add_tsp_options(app, o);
  CLI11_PARSE(app, argc, argv);
  return pav::cli::run_tsp(o);
}

}  // namespace

int main(int argc, char** argv) { return pav::cli::guarded("tsp", run, argc, argv); }
