#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/chain_lemma.hpp"
#include "chevalley/orbit_geometry.hpp"
#include "chevalley/summary_data.hpp"

namespace chevalley {

// One stored orbit row: a basepoint (sum of the root vectors named by
// `labels`, empty for the zero orbit), its Levi-orbit dimension and the
// ambient weighted Dynkin diagram of the adjoint orbit it meets. When a
// hand-typed source value disagrees with recomputation, the row keeps the
// source value in the main columns and carries an erratum annotation
// ("dim" or "wdd" -> recomputed value); verification treats an annotated
// mismatch as a note, not a regression.
struct OrbitRecord {
  std::vector<std::string> labels;
  int dim = 0;
  std::vector<int> wdd;
  std::optional<std::pair<std::string, std::string>> erratum;

  bool is_zero() const { return labels.empty(); }
};

struct ModuleTable {
  CartanType kind{Family::A, 1};
  int node = 0;
  int piece = 0;
  int dim = 0;
  std::string origin;  // file and line of the header, for diagnostics
  std::vector<OrbitRecord> records;
};

struct OrbitCatalog {
  std::vector<ModuleTable> tables;  // dataset order: family, node, piece

  const ModuleTable* find(CartanType kind, int node, int piece) const;
  std::vector<const ModuleTable*> for_node(CartanType kind, int node) const;
  long record_count() const;
};

// Parses any number of module blocks from one stream. Grammar (UTF-8,
// line-oriented): '#' starts a comment; blank lines ignored;
//   module <FAMILY><RANK> node <k> piece <i> dim <d>
//   orbit <label>[+<label>...]|0 dim <d> wdd <digits> [erratum <f>=<v>]
// Throws std::runtime_error with <origin>:<line> on malformed input.
std::vector<ModuleTable> parse_catalog(std::istream& in, const std::string& origin);

// The compiled-in dataset files, keyed by filename.
const std::map<std::string, std::string>& embedded_catalog();

// Loads every embedded table and generates the E6 node-5/6 tables from the
// node-3/1 ones by the order-2 diagram symmetry (labels and diagrams are
// permuted, dimensions kept). A nonempty `dataset_dir` reads *.txt files
// from that directory instead of the embedded copies.
OrbitCatalog load_orbit_catalog(const std::string& dataset_dir = "");

// ---- verification --------------------------------------------------------

struct VerifyReport {
  int modules = 0;
  long records = 0;
  std::vector<std::string> failures;  // empty iff everything recomputes
  std::vector<std::string> errata;    // confirmed source-typo annotations
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void merge(const VerifyReport& o);
};

// Recomputes one stored table from the structure constants: every basepoint
// parses into the stated piece, the Levi-orbit dimension and the weighted
// Dynkin diagram match the stored columns, records are distinct with
// non-increasing dims, the zero orbit appears exactly once and the dense
// orbit (dim == dim u_piece) exactly once, and each Levi orbit fits inside
// its adjoint orbit. Records are recomputed concurrently; the report is
// merged in dataset order.
VerifyReport verify_module(const ChevalleyBasis& basis, const ParabolicGrading& g,
                           const ModuleTable& table, bool parallel = true);

// verify_module plus the per-node checks against the expected summary:
// Levi type, piece count and dims, descriptor actions, the lower central
// series law, and each stated smaller realization of a higher piece.
// Restricting to one group or node restricts both loops.
VerifyReport verify_catalog(const OrbitCatalog& catalog,
                            std::optional<CartanType> only_kind = std::nullopt,
                            std::optional<int> only_node = std::nullopt,
                            bool parallel = true);

// Classical consistency: every stored table whose summary row names a
// classical first-piece realization must agree with the matching matrix
// enumerator's orbit count (tensor, bilinear, symmetric or exterior square,
// including the even-orthogonal split pair).
VerifyReport verify_classical_counts(const OrbitCatalog& catalog);

// verify_catalog over the whole dataset merged with the classical counts.
VerifyReport verify_all(const OrbitCatalog& catalog, bool parallel = true);

// ---- minimal-orbit support check -----------------------------------------

// One stage of the chain formed by successively deleting the highest node.
struct SupportStage {
  CartanType kind{Family::A, 1};  // simple factor containing the deleted node
  int node = 0;                   // the deleted node, in the factor's numbering
  int piece_dim = 0;
  bool abelian = false;        // the parabolic there has m = 1
  int nonzero_orbits = 0;
  int minimal_orbits = 0;      // must be exactly 1
  long minimal_dim = -1;       // adjoint dimension of the minimal orbit
  long next_dim = -1;          // smallest non-minimal adjoint dimension
  bool from_catalog = false;   // basepoints from the stored table
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SupportReport {
  CartanType kind{Family::A, 1};
  std::vector<SupportStage> stages;
  std::vector<ChainReport> chains;  // the embedded-chain checks, n = 7,6,5
  bool passed = false;
};

// Walks the subsystem chain of the given group (E6 or E7), checking at each
// stage that the last-node parabolic is abelian and that exactly one
// nontrivial orbit of u_1 lies in the minimal adjoint orbit, all others in
// strictly larger ones. Stored basepoints are used where the catalog has
// the stage's table; A-type stages are generated from the rank normal
// forms. Combines the embedded-chain reports for the applicable stages.
SupportReport minimal_support_check(CartanType kind, const OrbitCatalog& catalog);

std::string support_report_text(const SupportReport& r);

}  // namespace chevalley
