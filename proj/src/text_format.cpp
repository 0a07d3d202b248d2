#include "roadgames/text_format.hpp"

#include <fstream>
#include <sstream>

namespace roadgames {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

// Cursor over meaningful lines: comments stripped, blanks skipped.
class LineCursor {
public:
    explicit LineCursor(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto tokens = tokenize(line);
            if (!tokens.empty()) lines_.push_back(std::move(tokens));
            start = end + 1;
        }
    }

    bool done() const { return next_ >= lines_.size(); }
    const std::vector<std::string>& peek() const {
        if (done()) throw ParseError("unexpected end of input");
        return lines_[next_];
    }
    std::vector<std::string> take() {
        auto line = peek();
        ++next_;
        return line;
    }

private:
    std::vector<std::vector<std::string>> lines_;
    std::size_t next_ = 0;
};

std::vector<std::string> expect_keyword_line(LineCursor& cursor, const std::string& keyword) {
    if (cursor.done()) throw ParseError("missing '" + keyword + "' line");
    auto line = cursor.take();
    if (line.front() != keyword)
        throw ParseError("expected '" + keyword + "', found '" + line.front() + "'");
    line.erase(line.begin());
    return line;
}

NormalFormGame parse_normal_form_block(LineCursor& cursor) {
    auto rows = expect_keyword_line(cursor, "rows");
    auto cols = expect_keyword_line(cursor, "cols");
    if (rows.empty()) throw ParseError("'rows' lists no actions");
    if (cols.empty()) throw ParseError("'cols' lists no actions");
    auto payoff_line = expect_keyword_line(cursor, "payoffs");
    if (!payoff_line.empty()) throw ParseError("'payoffs' takes no arguments");

    std::vector<PayoffPair> cells;
    cells.reserve(rows.size() * cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (cursor.done())
            throw ParseError("payoffs: missing row " + std::to_string(r + 1));
        auto entries = cursor.take();
        if (entries.size() != cols.size())
            throw ParseError("payoffs row " + std::to_string(r + 1) + ": expected " +
                             std::to_string(cols.size()) + " cells, found " +
                             std::to_string(entries.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::string& cell = entries[c];
            auto comma = cell.find(',');
            if (comma == std::string::npos || cell.find(',', comma + 1) != std::string::npos)
                throw ParseError("payoffs row " + std::to_string(r + 1) + " col " +
                                 std::to_string(c + 1) + ": cell must be '<row>,<col>'");
            try {
                cells.push_back(PayoffPair{parse_rational(cell.substr(0, comma)),
                                           parse_rational(cell.substr(comma + 1))});
            } catch (const ParseError& err) {
                throw ParseError("payoffs row " + std::to_string(r + 1) + " col " +
                                 std::to_string(c + 1) + ": " + err.what());
            }
        }
    }
    try {
        return NormalFormGame(std::move(rows), std::move(cols), std::move(cells));
    } catch (const ShapeError& err) {
        throw ParseError(err.what());
    }
}

void serialize_normal_form_block(std::ostringstream& out, const NormalFormGame& game) {
    out << "rows";
    for (const auto& label : game.action_labels(Player::row)) out << ' ' << label;
    out << "\ncols";
    for (const auto& label : game.action_labels(Player::col)) out << ' ' << label;
    out << "\npayoffs\n";
    for (std::size_t r = 0; r < game.rows(); ++r) {
        for (std::size_t c = 0; c < game.cols(); ++c) {
            if (c > 0) out << ' ';
            out << to_string(game.at(r, c).row) << ',' << to_string(game.at(r, c).col);
        }
        out << '\n';
    }
}

}  // namespace

NormalFormGame parse_normal_form(std::string_view text) {
    LineCursor cursor(text);
    auto game = parse_normal_form_block(cursor);
    if (!cursor.done())
        throw ParseError("unexpected trailing content '" + cursor.peek().front() + "'");
    return game;
}

std::string serialize_normal_form(const NormalFormGame& game) {
    std::ostringstream out;
    serialize_normal_form_block(out, game);
    return out.str();
}

BayesianGame parse_bayesian_game(std::string_view text) {
    LineCursor cursor(text);
    BayesianGame game;
    game.types = expect_keyword_line(cursor, "types");
    if (game.types.empty()) throw ParseError("'types' lists no types");
    auto prior = expect_keyword_line(cursor, "prior");
    if (prior.size() != game.types.size())
        throw ParseError("prior: expected " + std::to_string(game.types.size()) +
                         " entries, found " + std::to_string(prior.size()));
    for (const auto& token : prior) {
        try {
            game.prior.push_back(parse_rational(token));
        } catch (const ParseError& err) {
            throw ParseError(std::string("prior: ") + err.what());
        }
    }
    auto observed = expect_keyword_line(cursor, "observed");
    if (observed.size() != 1)
        throw ParseError("observed: expected one of none|row|col|both");
    const std::string& mode = observed.front();
    if (mode == "none") {
        game.observed_by_row = game.observed_by_col = false;
    } else if (mode == "row") {
        game.observed_by_row = true;
        game.observed_by_col = false;
    } else if (mode == "col") {
        game.observed_by_row = false;
        game.observed_by_col = true;
    } else if (mode == "both") {
        game.observed_by_row = game.observed_by_col = true;
    } else {
        throw ParseError("observed: unknown mode '" + mode + "'");
    }
    for (const auto& type : game.types) {
        auto header = expect_keyword_line(cursor, "type");
        if (header.size() != 1 || header.front() != type)
            throw ParseError("expected 'type " + type + "'");
        game.games.push_back(parse_normal_form_block(cursor));
    }
    if (!cursor.done())
        throw ParseError("unexpected trailing content '" + cursor.peek().front() + "'");
    try {
        game.validate();
    } catch (const Error& err) {
        throw ParseError(err.what());
    }
    return game;
}

std::string serialize_bayesian_game(const BayesianGame& game) {
    std::ostringstream out;
    out << "types";
    for (const auto& type : game.types) out << ' ' << type;
    out << "\nprior";
    for (const auto& p : game.prior) out << ' ' << to_string(p);
    out << "\nobserved ";
    if (game.observed_by_row && game.observed_by_col)
        out << "both";
    else if (game.observed_by_row)
        out << "row";
    else if (game.observed_by_col)
        out << "col";
    else
        out << "none";
    out << '\n';
    for (std::size_t t = 0; t < game.types.size(); ++t) {
        out << "type " << game.types[t] << '\n';
        serialize_normal_form_block(out, game.games[t]);
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace roadgames
