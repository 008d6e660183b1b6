#include "cli_common.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Serve a request sequence on the line with k servers"};
  pav::cli::KServerOpts o;
  pav::cli::add_kserver_options(app, o);
  CLI11_PARSE(app, argc, argv);
  return pav::cli::run_kserver(o);
}

}  // namespace

int main(int argc, char** argv) { return pav::cli::guarded("kserver", run, argc, argv); }
