#pragma once

#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pav/perm.hpp"

namespace pav::cli {

std::string slurp(const std::string& path);  // "-" reads stdin
// a single line is a permutation (mapped into the unit square), otherwise "x y" per line
std::vector<Point> load_points(const std::string& path);
// one value per line; a permutation is mapped to (v-0.5)/n
Seq load_requests(const std::string& path);
// a file holding a permutation, or the permutation itself ("132")
Perm load_pattern(const std::string& arg);
// "" or "-" is stdout
std::ostream& open_out(const std::string& path, std::ofstream& file);

struct KServerOpts {
  std::string algo = "av231";
  int k = 2;
  int t = 2;
  std::string pattern;
  std::string in = "-";
  std::string out_csv;
  unsigned long long seed = 0;  // recorded in the CSV only
  bool oracle = false;
};
void add_kserver_options(CLI::App& app, KServerOpts& o);
int run_kserver(const KServerOpts& o);

struct TspOpts {
  std::string algo = "mst";
  std::string pattern;
  std::string in = "-";
  std::string out_csv;
};
void add_tsp_options(CLI::App& app, TspOpts& o);
int run_tsp(const TspOpts& o);

// runs fn, turning exceptions into a message on stderr and exit code 2
int guarded(const std::string& tool, int (*fn)(int, char**), int argc, char** argv);

}  // namespace pav::cli
