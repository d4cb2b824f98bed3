#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

namespace pturan {

using Rational = boost::rational<long long>;

struct BoundParams {
  int n = 0;
  std::optional<int> k;
  std::optional<int> t;
};

struct BoundEval {
  Rational value;
  bool in_range = true;
  std::string range_note;  // set when params fall outside the registered range
};

struct BoundInfo {
  std::string id;
  std::string formula;  // display text
  enum class Sense { Exact, Upper, Lower } sense;
  bool conjecture = false;
};

std::vector<BoundInfo> registered_bounds();

// Exact rational evaluation; remainders and floors/ceilings are computed over
// the integers. Unknown ids throw std::invalid_argument; out-of-range params
// evaluate anyway with a warning in range_note.
BoundEval eval_bound(const std::string& id, const BoundParams& p);

std::string rational_str(const Rational& r);

}  // namespace pturan
