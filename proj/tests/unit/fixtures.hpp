#pragma once

#include <vector>

#include "npvsched/model.hpp"

namespace npvsched::testing {

// 1 -> 2 -> 3 -> 4, durations (0,5,7,0).
inline ProjectNetwork chain(std::vector<double> cash = {0, 10, -10, 0},
                            double rate = 10, int deadline = 24) {
  return ProjectNetwork({0, 5, 7, 0}, std::move(cash), {{1, 2}, {2, 3}, {3, 4}},
                        rate, deadline);
}

// 1 -> {2, 3} -> 4, d2 = 5, d3 = 7.
inline ProjectNetwork diamond(std::vector<double> cash = {0, -50, 80, 0},
                              double rate = 5, int deadline = 14) {
  return ProjectNetwork({0, 5, 7, 0}, std::move(cash),
                        {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, rate, deadline);
}

inline ProjectNetwork six() {
  return ProjectNetwork({0, 3, 4, 2, 5, 0}, {0, -30, 20, -40, 25, 0},
                        {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
                        8, 15);
}

// Two independent branches, each ending in a negative activity.
inline ProjectNetwork two_branch() {
  return ProjectNetwork({0, 3, 3, 2, 2, 0}, {0, 50, 50, -20, -20, 0},
                        {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}}, 10, 10);
}

// Three of four activities negative: solved backward.
inline ProjectNetwork mostly_negative() {
  return ProjectNetwork({0, 4, 2, 6, 3, 0}, {0, -60, 15, -25, -35, 0},
                        {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
                        12, 18);
}

struct Frozen {
  ProjectNetwork (*make)();
  double npv;
  std::vector<int> starts;
};

// Optima from a plain exhaustive enumeration (no pruning), frozen here.
inline std::vector<Frozen> frozen_optima() {
  return {
      {[] { return chain(); }, 5.1939572506438445, {0, 0, 17, 24}},
      {[] { return diamond(); }, 31.60110876063379, {0, 9, 0, 14}},
      {six, 3.5662152954135102, {0, 10, 0, 13, 4, 15}},
      {two_branch, 59.70974851297651, {0, 0, 0, 8, 8, 10}},
      {mostly_negative, -11.244972820490982, {0, 8, 0, 12, 15, 18}},
  };
}

}  // namespace npvsched::testing
