#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tkms/matrix.hpp"
#include "tkms/numeric.hpp"

namespace tkms {

/// Malformed input documents and shape errors, as opposed to validation
/// failures of a well-formed skeleton.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested computation is outside the patterns this library can certify.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bidegree of a path: n1 blue edges, n2 red edges.
struct Degree {
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;

  Degree() = default;
  Degree(std::uint32_t b, std::uint32_t r) : n1(b), n2(r) {}

  std::uint32_t total() const { return n1 + n2; }
  Degree operator+(const Degree& o) const { return {n1 + o.n1, n2 + o.n2}; }
  bool operator==(const Degree&) const = default;
  bool operator<=(const Degree& o) const { return n1 <= o.n1 && n2 <= o.n2; }
};

/// A finite 2-graph at skeleton level: vertex list plus the two commuting
/// vertex matrices. Entry (v, w) of a matrix counts edges with range v and
/// source w, so paths compose range <- source and
/// |v Lambda^n w| = (A1^{n1} A2^{n2})_{v,w}.
struct TwoGraphSkeleton {
  std::vector<std::string> vertices;
  IntMat blue;  // color 1
  IntMat red;   // color 2

  std::size_t size() const { return vertices.size(); }

  const IntMat& matrix(int color) const { return color == 1 ? blue : red; }

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return i;
    throw std::invalid_argument("unknown vertex id: " + id);
  }
};

struct Violation {
  std::string kind;  // "negative-entry" | "commutation"
  int color = 0;     // for negative entries
  std::size_t row = 0, col = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Shape problems (non-square matrices, duplicate ids) throw structural_error;
/// everything else is reported as violations.
ValidationReport validate(const TwoGraphSkeleton& g);

/// Throws std::invalid_argument when the skeleton fails validation.
void require_valid(const TwoGraphSkeleton& g);

/// |v Lambda^n w|, exact. Guards against runaway enumeration via degree_cap.
BigInt path_count(const TwoGraphSkeleton& g, Degree n, std::size_t v, std::size_t w,
                  std::uint32_t degree_cap = 64);

/// Row vector 1^T restricted: counts of all paths of degree n with source w,
/// i.e. column sums of A1^{n1} A2^{n2}.
std::vector<BigInt> path_count_column_sums(const TwoGraphSkeleton& g, Degree n);

struct Component {
  std::vector<std::size_t> members;  // ascending vertex indices
  bool nontrivial = false;           // contains a cycle (possibly a loop)
};

/// Strongly connected components of the union of the blue and red edge
/// relations, ordered so that ranges come before sources (the order in which
/// the vertex matrices are upper triangular), ties broken by vertex order.
std::vector<Component> strongly_connected_components(const TwoGraphSkeleton& g);

std::vector<std::size_t> absolute_sources(const TwoGraphSkeleton& g);
/// Vertices receiving no edges of the given color.
std::vector<std::size_t> sources_by_color(const TwoGraphSkeleton& g, int color);

/// H is hereditary iff every edge with range in H has source in H.
bool is_hereditary(const TwoGraphSkeleton& g, const std::vector<std::size_t>& h);

/// Smallest hereditary superset of the seed.
std::vector<std::size_t> hereditary_closure(const TwoGraphSkeleton& g,
                                            std::vector<std::size_t> seed);

/// Skeleton on the complement of a hereditary set H; path counts agree with
/// counts of paths of the full graph avoiding H. Rejects non-hereditary H.
TwoGraphSkeleton quotient(const TwoGraphSkeleton& g, const std::vector<std::size_t>& h);

}  // namespace tkms
