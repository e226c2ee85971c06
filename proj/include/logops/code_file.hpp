#ifndef LOGOPS_CODE_FILE_HPP
#define LOGOPS_CODE_FILE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "logops/codes.hpp"
#include "logops/gf2.hpp"
#include "logops/gf4.hpp"
#include "logops/pauli.hpp"

namespace logops {

// Parsed code description file. Line format: one matrix row per line,
// sections introduced by "NAME:" on its own line, '#' starts a comment.
//
//   pauli: Pauli strings over {I,X,Y,Z}, one generator per line, before
//          any section; optional "NORMALIZER:" section of more strings.
//   css:   sections "G1:" and "G2:" required, "H1:"/"H2:" optional,
//          rows over {0,1} (spaces between digits allowed).
//   crss:  section "G:" required, "H:" optional, rows over {0,1,w,W}.
//
// The kind is inferred from the section names. Parsing validates shape
// and alphabet only; code invariants are checked by build_*_code /
// analyze_code_file.
struct CodeFile {
    enum class Kind { Pauli, Css, Crss };

    Kind kind = Kind::Pauli;

    // pauli
    GeneratorSet generators;
    std::optional<GeneratorSet> normalizer;

    // css (raw, unvalidated)
    BinMatrix g1, g2;
    std::optional<BinMatrix> h1, h2;

    // crss (raw, unvalidated)
    Gf4Matrix g;
    std::optional<Gf4Matrix> h;
};

CodeFile parse_code_file(std::string_view text);
CodeFile load_code_file(const std::string& path);

// Validated code objects from a parsed file. Throw ValidationError as the
// make_* factories do, ShapeError if called for the wrong kind.
CssCodePair build_css_code(const CodeFile& file);
Gf4Code build_gf4_code(const CodeFile& file);

// Dispatch to analyze_stabilizer / analyze_css / analyze_crss.
CodeReport analyze_code_file(const CodeFile& file);

}  // namespace logops

#endif
