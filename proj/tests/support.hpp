#ifndef STRALG_TESTS_SUPPORT_HPP_
#define STRALG_TESTS_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "stralg/presentation.hpp"
#include "stralg/words.hpp"

namespace testsupport {

inline std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline stralg::AlgebraPresentation corpus(std::string const& name) {
  auto A = stralg::parse_algebra(
      read_file(std::string(STRALG_CORPUS_DIR) + "/" + name + ".alg"));
  auto violations = validate_string_algebra(A);
  if (!violations.empty())
    throw std::runtime_error("corpus algebra failed validation: " + name);
  return A;
}

// The running partition from the literature for the one-vertex algebras:
// b, b^-1 on the +1 side and a, a^-1 on the -1 side.
inline stralg::HPartition paper_partition_r1(stralg::AlgebraPresentation const& A) {
  stralg::HPartition H = stralg::compute_h_partition(A);
  using stralg::Dir;
  using stralg::Letter;
  H.set("1", Letter("b", Dir::direct), 1);
  H.set("1", Letter("b", Dir::inverse), 1);
  H.set("1", Letter("a", Dir::direct), -1);
  H.set("1", Letter("a", Dir::inverse), -1);
  (void)A;
  return H;
}

}  // namespace testsupport

#endif
