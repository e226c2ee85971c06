#include "logops/code_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "logops/errors.hpp"

namespace logops {

namespace {

struct RawLine {
    std::string text;
    std::size_t number = 0;  // 1-based
};

struct Section {
    std::string name;  // "" for rows before the first header
    std::size_t header_line = 0;
    std::vector<RawLine> rows;
};

std::string strip(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<Section> split_sections(std::string_view text) {
    std::vector<Section> sections;
    sections.push_back({"", 0, {}});

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                             : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = strip(raw);
        if (line.empty()) continue;

        if (line.back() == ':') {
            std::string name = strip(std::string_view(line).substr(0, line.size() - 1));
            if (name.empty()) throw ParseError("empty section name", line_no);
            sections.push_back({std::move(name), line_no, {}});
        } else {
            sections.back().rows.push_back({line, line_no});
        }
    }
    return sections;
}

// "0 1 1" and "011" both parse; returns one int per symbol.
std::vector<int> parse_binary_row(const RawLine& line) {
    std::vector<int> bits;
    for (std::size_t i = 0; i < line.text.size(); ++i) {
        const char c = line.text[i];
        if (c == ' ' || c == '\t') continue;
        if (c == '0' || c == '1') {
            bits.push_back(c - '0');
        } else {
            throw ParseError(std::string("illegal binary character '") + c + "'", line.number,
                             i + 1);
        }
    }
    return bits;
}

BinMatrix parse_binary_section(const Section& s) {
    std::vector<std::vector<int>> rows;
    std::size_t width = 0;
    for (const RawLine& line : s.rows) {
        std::vector<int> bits = parse_binary_row(line);
        if (!rows.empty() && bits.size() != width) {
            throw ParseError("row width " + std::to_string(bits.size()) +
                                 " differs from earlier width " + std::to_string(width),
                             line.number);
        }
        width = bits.size();
        rows.push_back(std::move(bits));
    }
    return BinMatrix::from_rows(rows);
}

std::string parse_gf4_row(const RawLine& line) {
    std::string symbols;
    for (std::size_t i = 0; i < line.text.size(); ++i) {
        const char c = line.text[i];
        if (c == ' ' || c == '\t') continue;
        if (!Gf4::from_char(c)) {
            throw ParseError(std::string("illegal GF(4) character '") + c + "'", line.number,
                             i + 1);
        }
        symbols.push_back(c);
    }
    return symbols;
}

Gf4Matrix parse_gf4_section(const Section& s) {
    std::vector<std::string> rows;
    std::size_t width = 0;
    for (const RawLine& line : s.rows) {
        std::string symbols = parse_gf4_row(line);
        if (!rows.empty() && symbols.size() != width) {
            throw ParseError("row width " + std::to_string(symbols.size()) +
                                 " differs from earlier width " + std::to_string(width),
                             line.number);
        }
        width = symbols.size();
        rows.push_back(std::move(symbols));
    }
    return Gf4Matrix::from_string_rows(rows);
}

GeneratorSet parse_pauli_section(const Section& s) {
    std::vector<PauliVector> gens;
    std::size_t width = 0;
    for (const RawLine& line : s.rows) {
        std::string compact;
        for (std::size_t i = 0; i < line.text.size(); ++i) {
            const char c = line.text[i];
            if (c == ' ' || c == '\t') continue;
            compact.push_back(c);
        }
        if (!gens.empty() && compact.size() != width) {
            throw ParseError("Pauli string length " + std::to_string(compact.size()) +
                                 " differs from earlier length " + std::to_string(width),
                             line.number);
        }
        width = compact.size();
        try {
            gens.push_back(parse_pauli(compact));
        } catch (const ParseError& e) {
            throw ParseError("illegal Pauli character", line.number, e.column());
        }
    }
    return GeneratorSet(width, std::move(gens));
}

void require_consistent_width(std::size_t seen, std::size_t expected, std::size_t line) {
    if (seen != expected) {
        throw ParseError("section width " + std::to_string(seen) +
                             " differs from earlier sections' width " + std::to_string(expected),
                         line);
    }
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    const std::vector<Section> sections = split_sections(text);

    bool has_css = false;
    bool has_crss = false;
    bool has_pauli_rows = !sections[0].rows.empty();
    bool has_normalizer = false;
    for (std::size_t i = 1; i < sections.size(); ++i) {
        const std::string& name = sections[i].name;
        if (name == "G1" || name == "G2" || name == "H1" || name == "H2") {
            has_css = true;
        } else if (name == "G" || name == "H") {
            has_crss = true;
        } else if (name == "NORMALIZER") {
            has_normalizer = true;
        } else {
            throw ParseError("unknown section '" + name + "'", sections[i].header_line);
        }
    }
    if (has_css && has_crss) {
        throw ParseError("file mixes binary (G1/G2/H1/H2) and GF(4) (G/H) sections");
    }
    if ((has_css || has_crss) && (has_pauli_rows || has_normalizer)) {
        throw ParseError(has_pauli_rows ? "unexpected rows before the first section"
                                        : "NORMALIZER section in a matrix code file",
                         has_pauli_rows ? sections[0].rows[0].number : 0);
    }

    CodeFile file;
    if (has_css) {
        file.kind = CodeFile::Kind::Css;
        std::optional<BinMatrix> g1, g2;
        std::size_t width = 0;
        bool width_known = false;
        for (std::size_t i = 1; i < sections.size(); ++i) {
            const Section& s = sections[i];
            BinMatrix m = parse_binary_section(s);
            if (m.rows() > 0) {
                if (width_known) {
                    require_consistent_width(m.cols(), width, s.header_line);
                } else {
                    width = m.cols();
                    width_known = true;
                }
            }
            if (s.name == "G1") g1 = std::move(m);
            else if (s.name == "G2") g2 = std::move(m);
            else if (s.name == "H1") file.h1 = std::move(m);
            else file.h2 = std::move(m);
        }
        if (!g1) throw ParseError("css file is missing required section 'G1'");
        if (!g2) throw ParseError("css file is missing required section 'G2'");
        file.g1 = std::move(*g1);
        file.g2 = std::move(*g2);
        return file;
    }

    if (has_crss) {
        file.kind = CodeFile::Kind::Crss;
        std::optional<Gf4Matrix> g;
        for (std::size_t i = 1; i < sections.size(); ++i) {
            const Section& s = sections[i];
            Gf4Matrix m = parse_gf4_section(s);
            if (s.name == "G") g = std::move(m);
            else file.h = std::move(m);
        }
        if (!g) throw ParseError("crss file is missing required section 'G'");
        if (file.h && file.h->rows() > 0 && g->rows() > 0 && file.h->cols() != g->cols()) {
            throw ParseError("G and H widths differ (" + std::to_string(g->cols()) + " vs " +
                             std::to_string(file.h->cols()) + ")");
        }
        file.g = std::move(*g);
        return file;
    }

    file.kind = CodeFile::Kind::Pauli;
    file.generators = parse_pauli_section(sections[0]);
    for (std::size_t i = 1; i < sections.size(); ++i) {
        GeneratorSet ns = parse_pauli_section(sections[i]);
        if (!file.generators.empty() && !ns.empty() && ns.n != file.generators.n) {
            throw ParseError("normalizer qubit count " + std::to_string(ns.n) +
                                 " differs from generator qubit count " +
                                 std::to_string(file.generators.n),
                             sections[i].header_line);
        }
        if (file.generators.empty() && !ns.empty()) {
            file.generators.n = ns.n;
        }
        file.normalizer = std::move(ns);
    }
    return file;
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str());
}

CssCodePair build_css_code(const CodeFile& file) {
    if (file.kind != CodeFile::Kind::Css) {
        throw ShapeError("build_css_code: file does not describe a binary code pair");
    }
    return make_css_code(file.g1, file.g2, file.h1, file.h2);
}

Gf4Code build_gf4_code(const CodeFile& file) {
    if (file.kind != CodeFile::Kind::Crss) {
        throw ShapeError("build_gf4_code: file does not describe a GF(4) code");
    }
    return make_gf4_code(file.g, file.h);
}

CodeReport analyze_code_file(const CodeFile& file) {
    switch (file.kind) {
        case CodeFile::Kind::Css:
            return analyze_css(build_css_code(file));
        case CodeFile::Kind::Crss:
            return analyze_crss(build_gf4_code(file));
        case CodeFile::Kind::Pauli:
        default:
            return analyze_stabilizer(file.generators, file.normalizer);
    }
}

}  // namespace logops
