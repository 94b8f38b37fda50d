#pragma once

#include <string>
#include <string_view>

#include "chordlab/chord.hpp"
#include "chordlab/tqft.hpp"

namespace chordlab {

enum class DocumentKind { fatgraph, chord, frob, schedule };

/// Kind named by the header line (`fatgraph v1`, `chord v1`, `frob v1`,
/// `schedule v1`). Throws syntax_error.
DocumentKind detect_kind(std::string_view text);

/// Parsers throw syntax_error for malformed records and validation_error,
/// wrapping the module error, for well-formed documents describing an
/// invalid value. Both carry the 1-based line and column.
FatGraph parse_fatgraph(std::string_view text);
ChordDiagram parse_chord(std::string_view text);
FrobeniusAlgebra parse_algebra(std::string_view text);
GlueSchedule parse_schedule(std::string_view text);

/// Canonical text: sorted records, so equal values give identical bytes.
std::string serialize(const FatGraph& g);
std::string serialize(const ChordDiagram& c);
std::string serialize(const FrobeniusAlgebra& a);
std::string serialize(const GlueSchedule& s);

/// Graphviz rendering: circular edges solid and oriented along their
/// circle, ghost edges bold, one cluster per incoming circle, markings as
/// tail labels. With `canonical`, half-edges are first renamed by the
/// canonical labeling so isomorphic diagrams render identically.
std::string emit_dot(const ChordDiagram& c, bool canonical = false);

/// Whole file as bytes; throws io_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace chordlab
