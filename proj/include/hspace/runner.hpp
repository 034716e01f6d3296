// runner.hpp : the verify / distances / variant pipelines.
#pragma once

#include "hspace/config.hpp"
#include "hspace/report.hpp"

#include <string>

namespace hspace {

// biorthogonality, reconstruction, norm bound, witness identities and the
// headline density contrast; exit-0 iff everything passed
ReportBundle cmd_verify(const RunConfig& cfg);

// distance tables: full-span control, odd spans, summability methods,
// radial dilates, Abel identity, partial-sum growth
ReportBundle cmd_distances(const RunConfig& cfg);

// support(I) or Fourier pipeline; the identity variant reproduces the
// cmd_verify records exactly
ReportBundle cmd_variant(const RunConfig& cfg);

// Writes <command>.json / <command>.csv (per cfg.formats) plus optional
// plot-data CSVs into cfg.out_dir.
void write_outputs(const ReportBundle& bundle, const RunConfig& cfg);

// |a-b| <= tol * max(1, |a|, |b|) over all metrics present in both bundles;
// returns the offending metric names.
std::vector<std::string> cross_mode_disagreements(const ReportBundle& exact_bundle,
                                                  const ReportBundle& approx_bundle,
                                                  double rel_tol = 1e-9);

} // namespace hspace
