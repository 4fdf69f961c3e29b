#include "jetcert/io.hpp"

#include "jetcert/corpus.hpp"
#include "jetcert/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace jetcert {

namespace {

// Strip comments: '#' introduces a comment only at line start or after
// whitespace (jet variables such as x#1 contain a '#').
std::string strip_comment(const std::string &line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || std::isspace((unsigned char)line[i - 1])))
            return line.substr(0, i);
    }
    return line;
}

std::string trim(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct LineReader {
    std::istream &in;
    std::string file;
    std::size_t lineno = 0;

    // Next non-empty line after comment stripping; empty optional at EOF.
    std::optional<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string s = trim(strip_comment(raw));
            if (!s.empty()) return s;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw FileFormatError(file, lineno, msg);
    }
};

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

RingMap parse_map_block(LineReader &lr, const Presentation &source,
                        const Presentation &target) {
    auto header = lr.next();
    if (!header) lr.fail("expected 'map' header");
    auto toks = split_ws(*header);
    if (toks.size() != 3 || toks[0] != "map")
        lr.fail("expected 'map <source> <target>'");
    if (toks[1] != source.name)
        lr.fail("map source '" + toks[1] + "' does not match presentation '" + source.name + "'");
    if (toks[2] != target.name)
        lr.fail("map target '" + toks[2] + "' does not match presentation '" + target.name + "'");

    std::vector<std::optional<Polynomial>> images(source.ctx->size());
    for (;;) {
        auto line = lr.next();
        if (!line) lr.fail("unterminated map block (missing 'end')");
        if (*line == "end") break;
        auto arrow = line->find("->");
        if (arrow == std::string::npos) lr.fail("expected '<var> -> <expression>'");
        Variable v = parse_variable(trim(line->substr(0, arrow)));
        auto idx = source.ctx->find(v);
        if (!idx) lr.fail("unknown source variable '" + v.str() + "'");
        if (images[*idx]) lr.fail("duplicate image for '" + v.str() + "'");
        try {
            images[*idx] = parse_polynomial(line->substr(arrow + 2), target.ctx);
        } catch (const ParseError &e) {
            lr.fail(e.what());
        }
    }
    RingMap m{source, target, {}};
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) lr.fail("missing image for '" + source.ctx->var(i).str() + "'");
        m.images.push_back(std::move(*images[i]));
    }
    return m;
}

void print_map_block(std::ostream &out, const RingMap &m) {
    out << "map " << m.source.name << " " << m.target.name << "\n";
    for (std::size_t i = 0; i < m.images.size(); ++i)
        out << m.source.ctx->var(i).str() << " -> " << m.images[i].str() << "\n";
    out << "end\n";
}

} // namespace

Presentation parse_variety(std::istream &in, const std::string &display_name) {
    LineReader lr{in, display_name};
    auto ring = lr.next();
    if (!ring) lr.fail("empty variety file");
    auto toks = split_ws(*ring);
    if (toks.empty() || toks[0] != "ring") lr.fail("expected 'ring <variables...>'");
    std::vector<Variable> vars;
    for (std::size_t i = 1; i < toks.size(); ++i) vars.push_back(parse_variable(toks[i]));
    if (vars.empty()) lr.fail("ring line declares no variables");

    Presentation p;
    p.name = display_name;
    try {
        p.ctx = make_context(std::move(vars));
    } catch (const Error &e) {
        lr.fail(e.what());
    }

    auto ideal = lr.next();
    if (!ideal || *ideal != "ideal") lr.fail("expected 'ideal'");
    for (;;) {
        auto line = lr.next();
        if (!line) lr.fail("unterminated variety file (missing 'end')");
        if (*line == "end") break;
        try {
            p.generators.push_back(parse_polynomial(*line, p.ctx));
        } catch (const ParseError &e) {
            lr.fail(e.what());
        }
        if (p.generators.back().is_zero()) lr.fail("zero generator");
    }
    return p;
}

void print_variety(std::ostream &out, const Presentation &p) {
    out << "ring";
    for (const auto &v : p.ctx->vars()) out << " " << v.str();
    out << "\nideal\n";
    for (const auto &g : p.generators) out << g.str() << "\n";
    out << "end\n";
}

Presentation read_variety_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open variety file: " + path);
    // Name: file stem.
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0)
        name = name.substr(0, dot);
    return parse_variety(in, name);
}

void write_variety_file(const std::string &path, const Presentation &p) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    print_variety(out, p);
}

Presentation resolve_variety(const std::string &spec) {
    if (!spec.empty() && spec[0] == '@') {
        auto p = corpus::by_name(spec);
        if (!p) throw Error("unknown builtin variety '" + spec + "'");
        return *p;
    }
    return read_variety_file(spec);
}

RingMap read_map_file(const std::string &path, const Presentation &source,
                      const Presentation &target) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open map file: " + path);
    LineReader lr{in, path};
    return parse_map_block(lr, source, target);
}

void write_map_file(const std::string &path, const RingMap &m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    print_map_block(out, m);
}

CertificateFile read_certificate_file(const std::string &path, const Presentation &source,
                                      const Presentation &target) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open certificate file: " + path);
    LineReader lr{in, path};
    auto tag = lr.next();
    if (!tag || *tag != "forward") lr.fail("expected 'forward'");
    RingMap fwd = parse_map_block(lr, source, target);
    tag = lr.next();
    if (!tag || *tag != "backward") lr.fail("expected 'backward'");
    RingMap bwd = parse_map_block(lr, target, source);
    return {std::move(fwd), std::move(bwd)};
}

void write_certificate_file(const std::string &path, const IsoCertificate &cert) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << "forward\n";
    print_map_block(out, cert.forward);
    out << "backward\n";
    print_map_block(out, cert.backward);
}

CotangentFrame read_frame_file(const std::string &path, const Presentation &variety) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open frame file: " + path);
    LineReader lr{in, path};

    auto header = lr.next();
    if (!header) lr.fail("empty frame file");
    auto toks = split_ws(*header);
    if (toks.size() != 2 || toks[0] != "frame" || toks[1].rfind("n=", 0) != 0)
        lr.fail("expected 'frame n=<rank>'");
    std::size_t n = (std::size_t)std::stoul(toks[1].substr(2));
    std::size_t N = variety.ctx->size();
    std::size_t r = variety.generators.size();

    auto read_block = [&](const std::string &label, std::size_t rows, std::size_t cols) {
        auto line = lr.next();
        if (!line || *line != label) lr.fail("expected '" + label + "'");
        std::vector<std::vector<Polynomial>> m;
        for (std::size_t i = 0; i < rows; ++i) {
            auto row = lr.next();
            if (!row) lr.fail("unexpected end of file in block " + label);
            auto cells = split_commas(*row);
            if (cells.size() != cols)
                lr.fail("expected " + std::to_string(cols) + " entries, found " +
                        std::to_string(cells.size()));
            std::vector<Polynomial> prow;
            for (const auto &cell : cells) {
                try {
                    prow.push_back(parse_polynomial(cell, variety.ctx));
                } catch (const ParseError &e) {
                    lr.fail(e.what());
                }
            }
            m.push_back(std::move(prow));
        }
        return m;
    };

    CotangentFrame f;
    f.A = read_block("A:", n, N);
    f.B = read_block("B:", N, n);
    if (r > 0)
        f.C = read_block("C:", N, r);
    else
        f.C.assign(N, {});
    auto endl_ = lr.next();
    if (!endl_ || *endl_ != "end") lr.fail("expected 'end'");
    return f;
}

void write_frame_file(const std::string &path, const CotangentFrame &f,
                      const Presentation &variety) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << "frame n=" << f.A.size() << "\n";
    auto block = [&](const std::string &label, const std::vector<std::vector<Polynomial>> &m) {
        out << label << "\n";
        for (const auto &row : m) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? ", " : "") << row[j].str();
            out << "\n";
        }
    };
    block("A:", f.A);
    block("B:", f.B);
    if (!variety.generators.empty()) block("C:", f.C);
    out << "end\n";
}

} // namespace jetcert
