#pragma once

#include "tamari/heights.h"
#include "tamari/index_pair.h"
#include "tamari/poset.h"
#include "tamari/tropical.h"
#include "tamari/trees.h"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tamari::cli {

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> pair, nu;
  Mode mode = Mode::A;
  bool mode_given = false;
  std::optional<int> n;
  std::optional<std::string> height_file;
  std::string format = "text";
  std::optional<std::string> out;
  int jobs = 1;
  std::optional<int> max_size;
  bool all = false;
};

/// Thrown for bad input; the message is shown to the user.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv and runs the command. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Runs a parsed configuration, writing the result to out.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

IndexPair resolve_pair(const RunConfig& cfg);
HeightFunction resolve_height(const RunConfig& cfg, const IndexPair& p);

// Drawings.
std::string tree_svg(const std::vector<Tree>& trees, const IndexPair& p);
std::string trees_dot(const std::vector<Tree>& trees, const IndexPair& p);
/// Requires a complex whose vertices span at most a plane.
std::string complex_svg(const GeometricComplex& gc, const FinitePoset& order);

}  // namespace tamari::cli
