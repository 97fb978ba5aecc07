#pragma once

#include <descartes/criteria.hpp>

#include <vector>

namespace descartes {

struct CatalogRow {
  SignPattern pattern;
  AdmissiblePair ap;
  Classification cls;
  CatalogRow(SignPattern p, AdmissiblePair a, Classification c)
      : pattern(std::move(p)), ap(a), cls(std::move(c)) {}
};

struct CatalogOptions {
  bool blocks_only = false;   // restrict to three-block (c = 2) patterns
  bool witnesses = false;     // attach certified witnesses to Realizable rows
};

/// One row per (pattern, admissible pair) couple of the given degree, in
/// canonical order: pattern lexicographic, then pair lexicographic. Rows
/// are computed in parallel but emitted in canonical order, so the output
/// is byte-identical across runs.
std::vector<CatalogRow> build_catalog(int degree, const CatalogOptions& opts = {});

}  // namespace descartes
