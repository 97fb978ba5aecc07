#include <descartes/catalog.hpp>
#include <descartes/parallel.hpp>

#include <stdexcept>

namespace descartes {

std::vector<CatalogRow> build_catalog(int degree, const CatalogOptions& opts) {
  if (degree < 1) throw std::invalid_argument("build_catalog: degree must be >= 1");
  std::vector<SignPattern> patterns;
  if (opts.blocks_only) {
    for (int m = 1; m <= degree - 1; ++m)
      for (int n = 1; m + n <= degree; ++n)
        patterns.push_back(ThreeBlockPattern(m, n, degree + 1 - m - n).pattern());
  } else {
    for (long bits = 0; bits < (1L << degree); ++bits) {
      std::vector<int8_t> s(degree + 1, 1);
      for (int i = 0; i < degree; ++i)
        if (bits & (1L << i)) s[i + 1] = -1;
      patterns.emplace_back(std::move(s));
    }
  }
  std::sort(patterns.begin(), patterns.end(),
            [](const SignPattern& a, const SignPattern& b) { return a.str() < b.str(); });

  std::vector<std::pair<SignPattern, AdmissiblePair>> couples;
  for (const auto& p : patterns)
    for (const auto& ap : admissible_pairs(p)) couples.emplace_back(p, ap);

  std::vector<std::optional<CatalogRow>> slots(couples.size());
  ClassifyOptions copts;
  copts.attach_witness = opts.witnesses;
  parallel_for(couples.size(), [&](size_t i) {
    const auto& [p, ap] = couples[i];
    slots[i].emplace(p, ap, classify(p, ap, copts));
  });
  std::vector<CatalogRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

}  // namespace descartes
