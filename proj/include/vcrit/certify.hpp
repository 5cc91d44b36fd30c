#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vcrit/coloring.hpp"
#include "vcrit/graph.hpp"
#include "vcrit/search.hpp"

namespace vcrit {

enum class Provenance { kShipped, kEnumerated, kFile };

/// The (k+1)-vertex-critical graphs of the family of graphs avoiding `forbidden`.
class CriticalList {
 public:
  /// Re-verifies every graph: (k+1)-vertex-critical and a family member.
  /// Stored canonical, sorted by (order, canonical form).
  CriticalList(int k, std::vector<Graph> forbidden, const std::vector<Graph>& graphs, Provenance provenance);

  int k() const { return k_; }
  const std::vector<Graph>& forbidden() const { return forbidden_; }
  const std::vector<Graph>& graphs() const { return graphs_; }
  Provenance provenance() const { return provenance_; }

 private:
  int k_;
  std::vector<Graph> forbidden_;
  std::vector<Graph> graphs_;
  Provenance provenance_;
};

/// Co-gem-free lists shipped with the library: k = 2 is {K3, C5}; k = 3 is
/// the nine 4-vertex-critical co-gem-free graphs.
CriticalList shipped_cogem_list(int k);

struct Colourable {
  Colouring colouring;
};

struct NotColourable {
  Graph critical;        // the (k+1)-vertex-critical graph found inside the input
  Embedding embedding;   // critical -> input
};

struct NotInFamily {
  std::size_t pattern_index = 0;
  Graph pattern;
  Embedding embedding;   // pattern -> input
};

using Certificate = std::variant<Colourable, NotColourable, NotInFamily>;

class CertifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the input is in the family, is not k-colourable, and yet no
/// listed critical graph embeds: the list is not complete for the family.
class IncompleteListError : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

/// Family check first, then the listed critical graphs smallest first, then
/// an exact k-colouring.
Certificate certify_colourable(const Graph& g, int k, const CriticalList& list);

struct Verification {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

Verification verify_certificate(const Graph& g, int k, const Certificate& cert);

class FamilyViolationError : public CertifyError {
 public:
  FamilyViolationError(const std::string& what, FamilyViolation violation)
      : CertifyError(what), violation_(std::move(violation)) {}
  const FamilyViolation& violation() const { return violation_; }

 private:
  FamilyViolation violation_;
};

/// Every (co-gem, K4)-free graph is 4-colourable; this returns the colouring
/// and throws CertifyError should the exact solver ever disagree.
Colouring colour_cogem_k4free(const Graph& g);

const char* verdict_name(const Certificate& cert);

}  // namespace vcrit
