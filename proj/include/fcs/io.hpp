// Plain-text artifact files: codes, scheme parameters, commitments,
// openings, and sweep records. Lines are "key: value" pairs; '#' starts a
// comment line; a bare "table:" or "generator:" header introduces row
// lines. Emit and parse round-trip exactly.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fcs/channel.hpp"
#include "fcs/code.hpp"
#include "fcs/commitment.hpp"

namespace fcs::io {

void write_code(const CodeSet& code, std::ostream& out);
CodeSet read_code(std::istream& in);

/// Builtin codes ("paper7", "hamming74") are referenced by id alone;
/// any other code is embedded in full (generator rows when available,
/// the explicit table otherwise).
void write_params(const SchemeParams& params, std::ostream& out);
SchemeParams read_params(std::istream& in);

void write_commitment(const BitWord& commitment, std::ostream& out,
                      const std::vector<std::string>& comments = {});
BitWord read_commitment(std::istream& in);

void write_opening(const Opening& opening, std::ostream& out,
                   const std::vector<std::string>& comments = {});
Opening read_opening(std::istream& in);

/// One machine-readable record per line, key=value fields.
void write_sweep_records(const std::vector<SweepRow>& rows, std::ostream& out);

/// "paper7", "hamming74", or a path to a code file.
CodeSet resolve_code(const std::string& selector);

}  // namespace fcs::io
