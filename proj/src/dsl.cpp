#include "fpq/dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "fpq/loops.hpp"

namespace fpq {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based
};

bool is_word_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
}

/// Splits one line into words and the operators + - *; '#' ends the line.
std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (c == '+' || c == '-' || c == '*') {
            out.push_back({std::string(1, c), (int)i + 1});
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            size_t j = i;
            while (j < line.size() && is_word_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), (int)i + 1});
            i = j;
            continue;
        }
        throw ParseError(lineno, (int)i + 1,
                         std::string("unexpected character '") + c + "'");
    }
    return out;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

long long to_int(const Token& t, int lineno) {
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw ParseError(lineno, t.col, "integer out of range: " + t.text);
    }
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct ParserState {
    QuiverFile file;
    std::map<std::string, int> vertex_id;
    std::map<std::string, int> arrow_id;
    bool saw_vertices = false;

    int vertex(const Token& t, int lineno) const {
        auto it = vertex_id.find(t.text);
        if (it == vertex_id.end())
            throw ParseError(lineno, t.col, "unknown vertex: " + t.text);
        return it->second;
    }
};

void parse_vertices(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (st.saw_vertices)
        throw ParseError(lineno, tok[0].col, "duplicate vertices line");
    if (tok.size() < 2)
        throw ParseError(lineno, tok[0].col, "vertices line needs at least one name");
    for (size_t i = 1; i < tok.size(); ++i) {
        const Token& t = tok[i];
        if (t.text == "+" || t.text == "-" || t.text == "*")
            throw ParseError(lineno, t.col, "invalid vertex name: " + t.text);
        if (st.vertex_id.count(t.text))
            throw ParseError(lineno, t.col, "duplicate vertex: " + t.text);
        st.vertex_id[t.text] = st.file.base.q.num_vertices++;
        st.file.base.q.vertex_names.push_back(t.text);
    }
    st.saw_vertices = true;
}

void parse_arrow(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (tok.size() != 4)
        throw ParseError(lineno, tok[0].col, "expected: arrow NAME SRC DST");
    const Token& name = tok[1];
    if (is_integer(name.text))
        throw ParseError(lineno, name.col,
                         "arrow name must not be purely numeric: " + name.text);
    if (st.arrow_id.count(name.text))
        throw ParseError(lineno, name.col, "duplicate arrow: " + name.text);
    int src = st.vertex(tok[2], lineno);
    int dst = st.vertex(tok[3], lineno);
    int id = (int)st.file.base.q.arrows.size();
    st.arrow_id[name.text] = id;
    st.file.base.q.arrows.push_back({id, src, dst});
    st.file.base.q.arrow_names.push_back(name.text);
}

void parse_loops(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (tok.size() != 3)
        throw ParseError(lineno, tok[0].col, "expected: loops VERTEX COUNT");
    int v = st.vertex(tok[1], lineno);
    if (!is_integer(tok[2].text))
        throw ParseError(lineno, tok[2].col, "loop count must be a nonnegative integer");
    long long n = to_int(tok[2], lineno);
    if (st.file.loop_counts.count(v))
        throw ParseError(lineno, tok[1].col,
                         "duplicate loops line for vertex " + tok[1].text);
    st.file.loop_counts[v] = (int)n;
}

/// One relation term: optional integer coefficient, then a '*'-joined path
/// written leftmost-applied-last.
RelTerm parse_term(ParserState& st, const std::vector<Token>& tok, size_t& i,
                   int lineno, long long sign) {
    RelTerm term;
    term.coeff = sign;
    if (i < tok.size() && is_integer(tok[i].text)) {
        term.coeff = sign * to_int(tok[i], lineno);
        ++i;
        if (i >= tok.size() || tok[i].text != "*")
            throw ParseError(lineno, i < tok.size() ? tok[i].col : tok.back().col,
                             "expected '*' after coefficient");
        ++i;
    }
    std::vector<int> written;  // arrow ids in written order
    int term_col = 0;
    while (true) {
        if (i >= tok.size())
            throw ParseError(lineno, tok.back().col, "expected arrow name");
        const Token& t = tok[i];
        auto it = st.arrow_id.find(t.text);
        if (it == st.arrow_id.end())
            throw ParseError(lineno, t.col, "unknown arrow: " + t.text);
        if (term_col == 0) term_col = t.col;
        written.push_back(it->second);
        ++i;
        if (i < tok.size() && tok[i].text == "*")
            ++i;
        else
            break;
    }
    // rightmost applies first
    std::vector<int> seq(written.rbegin(), written.rend());
    const Quiver& q = st.file.base.q;
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (q.arrows[seq[k]].dst != q.arrows[seq[k + 1]].src)
            throw ParseError(lineno, term_col,
                             "non-composable path: target of " +
                                 q.arrow_names[seq[k]] + " is not the source of " +
                                 q.arrow_names[seq[k + 1]]);
    if ((int)seq.size() < 2)
        throw ParseError(lineno, term_col,
                         "relation path of length < 2 (ideal would not be admissible)");
    term.path = Path::of(q, seq);
    return term;
}

void parse_rel(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (tok.size() < 2)
        throw ParseError(lineno, tok[0].col, "empty relation");
    Relation rel;
    size_t i = 1;
    long long sign = 1;
    if (tok[i].text == "-") {
        sign = -1;
        ++i;
    }
    rel.terms.push_back(parse_term(st, tok, i, lineno, sign));
    while (i < tok.size()) {
        if (tok[i].text == "+")
            sign = 1;
        else if (tok[i].text == "-")
            sign = -1;
        else
            throw ParseError(lineno, tok[i].col, "expected '+' or '-' between terms");
        ++i;
        rel.terms.push_back(parse_term(st, tok, i, lineno, sign));
    }
    int src = rel.terms[0].path.source(st.file.base.q);
    int dst = rel.terms[0].path.target(st.file.base.q);
    for (const RelTerm& t : rel.terms)
        if (t.path.source(st.file.base.q) != src ||
            t.path.target(st.file.base.q) != dst)
            throw ParseError(lineno, tok[0].col,
                             "relation terms are not parallel paths");
    st.file.base.relations.push_back(std::move(rel));
}

void parse_field(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (st.file.field)
        throw ParseError(lineno, tok[0].col, "duplicate field line");
    if (tok.size() == 2 && tok[1].text == "Q") {
        st.file.field = FieldSpec{true, 0};
        return;
    }
    if (tok.size() == 3 && tok[1].text == "p" && is_integer(tok[2].text)) {
        long long p = to_int(tok[2], lineno);
        if (!is_prime(p))
            throw ParseError(lineno, tok[2].col,
                             "field characteristic must be prime: " + tok[2].text);
        st.file.field = FieldSpec{false, p};
        return;
    }
    throw ParseError(lineno, tok[0].col, "expected: field p INTEGER | field Q");
}

void parse_nilpotency(ParserState& st, const std::vector<Token>& tok, int lineno) {
    if (st.file.nilpotency)
        throw ParseError(lineno, tok[0].col, "duplicate nilpotency line");
    if (tok.size() != 2 || !is_integer(tok[1].text))
        throw ParseError(lineno, tok[0].col, "expected: nilpotency INTEGER");
    long long n = to_int(tok[1], lineno);
    if (n < 2)
        throw ParseError(lineno, tok[1].col, "nilpotency must be at least 2");
    st.file.nilpotency = (int)n;
}

}  // namespace

QuiverFile parse_quiver(const std::string& text) {
    ParserState st;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tok = tokenize(line, lineno);
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;
        if (kw == "vertices")
            parse_vertices(st, tok, lineno);
        else if (kw == "arrow")
            parse_arrow(st, tok, lineno);
        else if (kw == "loops")
            parse_loops(st, tok, lineno);
        else if (kw == "rel")
            parse_rel(st, tok, lineno);
        else if (kw == "field")
            parse_field(st, tok, lineno);
        else if (kw == "nilpotency")
            parse_nilpotency(st, tok, lineno);
        else
            throw ParseError(lineno, tok[0].col, "unknown directive: " + kw);
    }
    if (!st.saw_vertices) throw ParseError(lineno + 1, 1, "missing vertices line");
    st.file.base.validate();
    return st.file;
}

BoundQuiver QuiverFile::elaborate() const {
    if (loop_counts.empty()) return base;
    int order = nilpotency ? std::max(2, *nilpotency) : 2;
    return loop_extend(base, loop_counts, order);
}

std::string print_quiver(const QuiverFile& f) {
    std::ostringstream out;
    const Quiver& q = f.base.q;
    out << "vertices";
    for (const std::string& v : q.vertex_names) out << ' ' << v;
    out << '\n';
    for (size_t i = 0; i < q.arrows.size(); ++i)
        out << "arrow " << q.arrow_names[i] << ' ' << q.vertex_names[q.arrows[i].src]
            << ' ' << q.vertex_names[q.arrows[i].dst] << '\n';
    for (auto [v, n] : f.loop_counts)
        out << "loops " << q.vertex_names[v] << ' ' << n << '\n';
    for (const Relation& r : f.base.relations) {
        out << "rel ";
        for (size_t t = 0; t < r.terms.size(); ++t) {
            long long c = r.terms[t].coeff;
            if (t == 0) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            long long a = c < 0 ? -c : c;
            if (a != 1) out << a << '*';
            const auto& seq = r.terms[t].path.seq;
            for (size_t k = seq.size(); k-- > 0;) {
                out << q.arrow_names[seq[k]];
                if (k > 0) out << '*';
            }
        }
        out << '\n';
    }
    if (f.field) {
        if (f.field->rational)
            out << "field Q\n";
        else
            out << "field p " << f.field->p << '\n';
    }
    if (f.nilpotency) out << "nilpotency " << *f.nilpotency << '\n';
    return out.str();
}

}  // namespace fpq
