#include "naesat/textio.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace naesat {

namespace {

// Line-oriented tokenizer tracking 1-based line and column positions.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    struct Token {
        std::string_view text;
        int line;
        int column;
    };

    // Next token on the current line, or nothing at end of line.
    std::optional<Token> next_on_line() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\r'))
            advance();
        if (pos_ >= text_.size() || text_[pos_] == '\n') return std::nullopt;
        Token t{{}, line_, column_};
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' &&
               text_[pos_] != '\r' && text_[pos_] != '\n')
            advance();
        t.text = text_.substr(start, pos_ - start);
        return t;
    }

    // Move to the start of the next line; true if one exists.
    bool next_line() {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        if (pos_ >= text_.size()) return false;
        advance();  // consume the newline
        return true;
    }

    int line() const { return line_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

long long parse_int(const Scanner::Token& t) {
    long long value = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || end != t.text.data() + t.text.size())
        throw ParseError(t.line, t.column,
                         "expected an integer, got '" + std::string(t.text) + "'");
    return value;
}

Scanner::Token expect_token(Scanner& sc, const char* what) {
    auto t = sc.next_on_line();
    if (!t) throw ParseError(sc.line(), 1, std::string("expected ") + what);
    return *t;
}

void expect_line_end(Scanner& sc) {
    if (auto extra = sc.next_on_line())
        throw ParseError(extra->line, extra->column,
                         "unexpected trailing token '" + std::string(extra->text) + "'");
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
    Scanner sc(text);
    bool have_header = false;
    long long num_vars = 0, num_clauses = 0, num_blocks = 0;
    std::vector<std::string> names;
    std::vector<Clause> clauses;
    std::vector<int> tags;

    bool more = true;
    while (more) {
        auto first = sc.next_on_line();
        if (first) {
            if (first->text == "c") {
                // comment line
            } else if (first->text == "p") {
                if (have_header)
                    throw ParseError(first->line, first->column, "duplicate header");
                auto kind = expect_token(sc, "format name after 'p'");
                if (kind.text != "nae")
                    throw ParseError(kind.line, kind.column,
                                     "unknown format '" + std::string(kind.text) + "'");
                num_vars = parse_int(expect_token(sc, "variable count"));
                num_clauses = parse_int(expect_token(sc, "clause count"));
                num_blocks = parse_int(expect_token(sc, "block count"));
                if (num_vars < 0 || num_clauses < 0 || num_blocks < 0)
                    throw ParseError(first->line, first->column, "negative count in header");
                expect_line_end(sc);
                names.assign(static_cast<std::size_t>(num_vars), "");
                have_header = true;
            } else if (first->text == "n") {
                if (!have_header)
                    throw ParseError(first->line, first->column, "name line before header");
                auto idx_tok = expect_token(sc, "variable index");
                long long idx = parse_int(idx_tok);
                if (idx < 1 || idx > num_vars)
                    throw ParseError(idx_tok.line, idx_tok.column,
                                     "name index out of range");
                auto name_tok = expect_token(sc, "variable name");
                names[static_cast<std::size_t>(idx - 1)] = std::string(name_tok.text);
                expect_line_end(sc);
            } else {
                if (!have_header)
                    throw ParseError(first->line, first->column, "clause line before header");
                long long tag = parse_int(*first);
                if (num_blocks == 0 ? tag != 0 : (tag < 1 || tag > num_blocks))
                    throw ParseError(first->line, first->column,
                                     "block tag " + std::to_string(tag) + " out of range");
                std::vector<Literal> lits;
                bool closed = false;
                while (auto t = sc.next_on_line()) {
                    long long lit = parse_int(*t);
                    if (lit == 0) {
                        closed = true;
                        if (auto extra = sc.next_on_line())
                            throw ParseError(extra->line, extra->column,
                                             "tokens after clause terminator");
                        break;
                    }
                    long long var = lit > 0 ? lit : -lit;
                    if (var > num_vars)
                        throw ParseError(t->line, t->column,
                                         "literal " + std::to_string(lit) + " out of range");
                    lits.push_back(Literal{static_cast<int>(var - 1), lit < 0});
                }
                if (!closed)
                    throw ParseError(first->line, first->column,
                                     "clause not terminated by 0");
                try {
                    clauses.push_back(Clause(std::move(lits)));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(first->line, first->column, e.what());
                }
                tags.push_back(static_cast<int>(tag));
            }
        }
        more = sc.next_line();
    }

    if (!have_header) throw ParseError(sc.line(), 1, "missing 'p nae' header");
    if (static_cast<long long>(clauses.size()) != num_clauses)
        throw ParseError(sc.line(), 1,
                         "declared " + std::to_string(num_clauses) + " clauses, found " +
                             std::to_string(clauses.size()));

    bool any_name = std::any_of(names.begin(), names.end(),
                                [](const std::string& s) { return !s.empty(); });
    ParsedInstance out{Formula(0, {}), std::nullopt};
    try {
        out.formula = Formula(static_cast<int>(num_vars), std::move(clauses),
                              any_name ? names : std::vector<std::string>{});
    } catch (const std::invalid_argument& e) {
        throw ParseError(sc.line(), 1, e.what());
    }
    if (num_blocks > 0) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(num_blocks));
        for (std::size_t j = 0; j < tags.size(); ++j)
            blocks[static_cast<std::size_t>(tags[j] - 1)].push_back(static_cast<int>(j));
        try {
            out.decomposition = Decomposition(out.formula.num_clauses(), std::move(blocks));
        } catch (const std::invalid_argument& e) {
            throw ParseError(sc.line(), 1, e.what());
        }
    }
    return out;
}

std::string serialize_instance(const Formula& f, const std::optional<Decomposition>& d) {
    if (d && d->num_clauses() != f.num_clauses())
        throw std::invalid_argument("decomposition clause count mismatch");
    std::ostringstream out;
    out << "p nae " << f.num_vars() << ' ' << f.num_clauses() << ' '
        << (d ? d->num_blocks() : 0) << '\n';
    for (std::size_t v = 0; v < f.var_names().size(); ++v)
        if (!f.var_names()[v].empty())
            out << "n " << v + 1 << ' ' << f.var_names()[v] << '\n';
    for (std::size_t j = 0; j < f.num_clauses(); ++j) {
        out << (d ? d->block_of(static_cast<int>(j)) + 1 : 0);
        for (const Literal& l : f.clauses()[j].normalized())
            out << ' ' << (l.negated ? -(l.var + 1) : l.var + 1);
        out << " 0\n";
    }
    return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
    Scanner sc(text);
    bool have_header = false;
    long long num_vertices = 0, num_edges = 0, num_matchings = 0;
    Hypergraph h;
    std::vector<std::vector<int>> matchings;

    bool more = true;
    while (more) {
        auto first = sc.next_on_line();
        if (first) {
            if (first->text == "c") {
            } else if (first->text == "h") {
                if (have_header)
                    throw ParseError(first->line, first->column, "duplicate header");
                num_vertices = parse_int(expect_token(sc, "vertex count"));
                num_edges = parse_int(expect_token(sc, "edge count"));
                num_matchings = parse_int(expect_token(sc, "matching count"));
                if (num_vertices < 0 || num_edges < 0 || num_matchings < 0)
                    throw ParseError(first->line, first->column, "negative count in header");
                expect_line_end(sc);
                h.num_vertices = static_cast<int>(num_vertices);
                have_header = true;
            } else if (first->text == "m") {
                if (!have_header)
                    throw ParseError(first->line, first->column, "matching before header");
                std::vector<int> group;
                while (auto t = sc.next_on_line()) {
                    long long idx = parse_int(*t);
                    if (idx < 1 || idx > num_edges)
                        throw ParseError(t->line, t->column, "edge index out of range");
                    group.push_back(static_cast<int>(idx - 1));
                }
                matchings.push_back(std::move(group));
            } else {
                if (!have_header)
                    throw ParseError(first->line, first->column, "edge line before header");
                std::vector<int> edge;
                long long v = parse_int(*first);
                auto push = [&](long long vertex, const Scanner::Token& t) {
                    if (vertex < 1 || vertex > num_vertices)
                        throw ParseError(t.line, t.column, "vertex index out of range");
                    edge.push_back(static_cast<int>(vertex - 1));
                };
                push(v, *first);
                while (auto t = sc.next_on_line()) push(parse_int(*t), *t);
                if (edge.size() != 3)
                    throw ParseError(first->line, first->column,
                                     "edge must list exactly three vertices");
                std::sort(edge.begin(), edge.end());
                if (edge[0] == edge[1] || edge[1] == edge[2])
                    throw ParseError(first->line, first->column,
                                     "edge vertices must be distinct");
                h.edges.push_back(std::move(edge));
            }
        }
        more = sc.next_line();
    }
    if (!have_header) throw ParseError(sc.line(), 1, "missing 'h' header");
    if (static_cast<long long>(h.edges.size()) != num_edges)
        throw ParseError(sc.line(), 1, "declared edge count mismatch");
    if (static_cast<long long>(matchings.size()) != num_matchings)
        throw ParseError(sc.line(), 1, "declared matching count mismatch");
    if (num_matchings > 0) h.matchings = std::move(matchings);
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    std::size_t num_matchings = h.matchings ? h.matchings->size() : 0;
    out << "h " << h.num_vertices << ' ' << h.edges.size() << ' ' << num_matchings << '\n';
    for (const auto& edge : h.edges) {
        std::vector<int> sorted = edge;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            out << (i ? " " : "") << sorted[i] + 1;
        out << '\n';
    }
    if (h.matchings)
        for (const auto& group : *h.matchings) {
            std::vector<int> sorted = group;
            std::sort(sorted.begin(), sorted.end());
            out << 'm';
            for (int idx : sorted) out << ' ' << idx + 1;
            out << '\n';
        }
    return out.str();
}

}  // namespace naesat
