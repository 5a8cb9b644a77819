#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocat/rep.hpp"

namespace monocat {

enum class EntrySource { Tree, Matrix, Y };

struct CatalogEntry {
  std::string name;
  EntrySource source = EntrySource::Matrix;
  std::optional<std::string> tree;  // tree label for tree-named entries
  Rep rep;                          // always the stored (displayed) matrix
};

/// Indecomposables of mono(A2, Z/p^n), n ∈ {3,4,5}: 10 / 20 / 50 entries.
std::vector<CatalogEntry> build_catalog(int n, int p);
/// Indecomposables of mono(D4, Z/p^2) for the D4 with arrows 0→3, 1→3, 2→3:
/// 12 non-injective entries followed by the injectives f_!(Λ(i)).
std::vector<CatalogEntry> build_d4_catalog(int p);
Quiver d4_catalog_quiver();

/// x, y and a list of elements c_x·x + c_y·y with their expected valuations, for the two
/// entries whose valuated groups are not simply presented (n = 5).
struct ValuationWitness {
  std::string label;
  Int cx = 0;
  Int cy = 0;
  int value = 0;
};
struct HungData {
  std::string name;
  Vec x;
  Vec y;
  std::vector<ValuationWitness> witnesses;
};
std::vector<HungData> hung_data(int p);

struct CatalogReport {
  int n = 0;
  int p = 0;
  int entries = 0;
  int mono = 0;
  int indecomposable = 0;
  int classes = 0;            // isomorphism classes among the entries
  int trees_enumerated = -1;  // -1 when not applicable (D4)
  int tree_matches = 0;       // tree-named entries ≅ m_of_t(tree)
  int simply_presented = 0;   // non-Y entries realized by an enumerated tree
  std::vector<std::string> not_simply_presented;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
/// Checks (a) mono, (b) indecomposable, (c) pairwise non-isomorphic, (d) tree labels agree
/// with m_of_t, (e) enumerated trees biject onto the simply presented entries, (f) the
/// remaining non-Y entries are exactly M_F and M_T (n = 5) or none.
CatalogReport verify_catalog(int n, int p);
/// mono, indecomposable, pairwise non-isomorphic, injectivity flags as listed.
CatalogReport verify_d4_catalog(int p);

struct RepTypeVerdict {
  bool finite = false;
  std::optional<std::string> note;  // "tame", "wild" or "open" for linearly oriented A_m
};
/// Representation type of mono(Q, Z/p^n).
RepTypeVerdict rep_type(const Quiver& q, int n);
/// ADE recognition on the underlying graph of one connected vertex set; returns e.g. "A3",
/// "D5", "E6", or nullopt.
std::optional<std::string> dynkin_type(const Quiver& q, const std::vector<int>& component);

}  // namespace monocat
