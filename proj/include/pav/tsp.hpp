#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pav/decomp.hpp"
#include "pav/perm.hpp"

namespace pav {

struct EdgeSet {
  enum class Kind { tree, tour };
  Kind kind = Kind::tree;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order;  // tours only: the visiting order
  double length = 0;
};

enum class Metric { L2, Linf };

double dist(const Point& a, const Point& b);

// dense Prim, O(n^2)
EdgeSet mst(const std::vector<Point>& pts);
double nn_sum(const std::vector<Point>& pts, Metric m = Metric::L2);
// points with integer coordinates; exact
std::int64_t nn_sum_linf_int(const std::vector<Point>& pts);

double tour_length(const std::vector<Point>& pts, const std::vector<int>& order);
// preorder shortcut of the MST
EdgeSet tour_from_mst(const std::vector<Point>& pts);
// preorder of a tree over pts, dropping nodes >= n_visit (Steiner points)
EdgeSet tour_from_tree(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges, int n_visit);

double held_karp(const std::vector<Point>& pts);       // at most 13 points
double brute_force_tsp(const std::vector<Point>& pts);  // at most 9 points

bool is_spanning_tree(int n, const std::vector<std::pair<int, int>>& edges);
bool is_tour(int n, const std::vector<int>& order);

// one edge per merge, between the smallest point indices of the two rectangles;
// lengths in the unit-square coordinates of the decomposition
EdgeSet spanning_tree_from_decomp(const Decomposition& dec);

struct SteinerTree {
  std::vector<Point> points;  // the input first, then added corner points
  int n_input = 0;
  EdgeSet tree;
  bool is_steiner(int i) const { return i >= n_input; }
};
// P inside [0,w] x [0,h], avoiding 231 and pi; weight <= 2|pi|(w+h)
SteinerTree spanning_tree_231_pi(const std::vector<Point>& P, double w, double h, const Perm& pi);

// P_k on the integer grid [2^k-1]^2
std::vector<Point> gen_Pk(int k);
std::vector<Point> scale_to_unit(std::vector<Point> pts, double side);
// canonical d x d grid scaled into the unit square
std::vector<Point> gen_Gd(int d);
std::vector<Point> gen_Pdt(int d, int t);
// sheared s x s lattice with s = ceil(sqrt(n)), first n points
std::vector<Point> gen_uniform_grid(int n);

}  // namespace pav
