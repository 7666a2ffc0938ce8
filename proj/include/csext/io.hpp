// csext - extensions of completely simple semigroups by groups
//
// Line-based text formats.
//
//   GROUP <n>                 RMS
//   <n rows of n ids>         GROUP <n>
//                             <n rows of n ids>
//                             I <m>
//                             LAMBDA <k>
//                             <k rows of m ids>   (row l of P)
//
// Blank lines and lines starting with '#' are ignored.  Parse failures carry
// the 1-based line and column of the offending token.

#ifndef CSEXT_IO_HPP_
#define CSEXT_IO_HPP_

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "rees.hpp"

namespace csext {

  namespace detail {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::size_t        number;  // 1-based
      std::vector<Token> tokens;
    };

    class LineReader {
     public:
      explicit LineReader(std::string text) : _text(std::move(text)) {
        std::size_t start = 0, number = 0;
        while (start <= _text.size()) {
          std::size_t end = _text.find('\n', start);
          if (end == std::string::npos) {
            end = _text.size();
          }
          ++number;
          std::string_view raw(_text.data() + start, end - start);
          Line             line{number, {}};
          for (std::size_t k = 0; k < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[k]))) {
              ++k;
              continue;
            }
            std::size_t e = k;
            while (e < raw.size()
                   && !std::isspace(static_cast<unsigned char>(raw[e]))) {
              ++e;
            }
            line.tokens.push_back(Token{raw.substr(k, e - k), k + 1});
            k = e;
          }
          if (!line.tokens.empty() && line.tokens[0].text[0] != '#') {
            _lines.push_back(std::move(line));
          }
          _last = number;
          start = end + 1;
        }
      }

      bool done() const noexcept {
        return _pos == _lines.size();
      }

      Line const& next(char const* expecting) {
        if (done()) {
          throw ParseError(_last, 1, std::string("unexpected end of input, expected ") + expecting);
        }
        return _lines[_pos++];
      }

      Line const& peek() const {
        return _lines[_pos];
      }

     private:
      std::string       _text;
      std::vector<Line> _lines;
      std::size_t       _pos  = 0;
      std::size_t       _last = 0;
    };

    inline std::size_t parse_count(Line const& line, Token const& tok) {
      std::size_t value = 0;
      auto const* first = tok.text.data();
      auto const* last  = first + tok.text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(line.number,
                         tok.column,
                         "expected a non-negative integer, got '"
                             + std::string(tok.text) + "'");
      }
      return value;
    }

    // A line of the form "<keyword> <count>".
    inline std::size_t expect_header(LineReader& in, std::string_view keyword) {
      std::string const kw(keyword);
      Line const&       line = in.next(kw.c_str());
      if (line.tokens[0].text != keyword) {
        throw ParseError(line.number,
                         line.tokens[0].column,
                         "expected '" + kw + "', got '"
                             + std::string(line.tokens[0].text) + "'");
      }
      if (line.tokens.size() != 2) {
        std::size_t col = line.tokens.size() < 2 ? line.tokens[0].column
                                                       + line.tokens[0].text.size()
                                                 : line.tokens[2].column;
        throw ParseError(line.number, col, "expected '" + kw + " <count>'");
      }
      return parse_count(line, line.tokens[1]);
    }

    inline std::vector<element_id>
    read_row(LineReader& in, std::size_t width, std::size_t bound) {
      Line const& line = in.next("a table row");
      if (line.tokens.size() != width) {
        std::size_t col = line.tokens.size() > width
                              ? line.tokens[width].column
                              : line.tokens.back().column
                                    + line.tokens.back().text.size();
        throw ParseError(line.number,
                         col,
                         "expected " + std::to_string(width) + " entries, got "
                             + std::to_string(line.tokens.size()));
      }
      std::vector<element_id> row;
      row.reserve(width);
      for (auto const& tok : line.tokens) {
        std::size_t v = parse_count(line, tok);
        if (v >= bound) {
          throw ParseError(line.number,
                           tok.column,
                           "entry " + std::to_string(v) + " out of range [0, "
                               + std::to_string(bound) + ")");
        }
        row.push_back(static_cast<element_id>(v));
      }
      return row;
    }

    inline FiniteGroup read_group_block(LineReader& in) {
      std::size_t const n = expect_header(in, "GROUP");
      if (n == 0) {
        throw Error(ErrorCode::ZeroOrder, "group order must be positive");
      }
      std::vector<std::vector<element_id>> grid;
      for (std::size_t r = 0; r < n; ++r) {
        grid.push_back(read_row(in, n, n));
      }
      return make_group_from_table(grid);
    }

    inline ReesMatrixSemigroup read_rms_body(LineReader& in) {
      FiniteGroup       g = read_group_block(in);
      std::size_t const m = expect_header(in, "I");
      std::size_t const k = expect_header(in, "LAMBDA");
      std::vector<std::vector<element_id>> p;
      for (std::size_t l = 0; l < k; ++l) {
        p.push_back(read_row(in, m, g.order()));
      }
      return ReesMatrixSemigroup(std::move(g), m, k, std::move(p));
    }

    inline void expect_end(LineReader& in) {
      if (!in.done()) {
        auto const& line = in.peek();
        throw ParseError(line.number, line.tokens[0].column, "trailing input");
      }
    }

    inline std::string slurp(std::string const& path) {
      std::ifstream file(path, std::ios::binary);
      if (!file) {
        throw ParseError(0, 0, "cannot open '" + path + "'");
      }
      std::ostringstream ss;
      ss << file.rdbuf();
      return ss.str();
    }

  }  // namespace detail

  inline FiniteGroup parse_group(std::string text) {
    detail::LineReader in(std::move(text));
    FiniteGroup        g = detail::read_group_block(in);
    detail::expect_end(in);
    return g;
  }

  inline ReesMatrixSemigroup parse_rms(std::string text) {
    detail::LineReader in(std::move(text));
    detail::Line const& head = in.next("RMS");
    if (head.tokens[0].text != "RMS" || head.tokens.size() != 1) {
      throw ParseError(head.number, head.tokens[0].column, "expected 'RMS'");
    }
    ReesMatrixSemigroup s = detail::read_rms_body(in);
    detail::expect_end(in);
    return s;
  }

  inline std::string format_group(FiniteGroup const& g) {
    std::string out = "GROUP " + std::to_string(g.order()) + "\n";
    for (element_id a = 0; a < g.order(); ++a) {
      for (element_id b = 0; b < g.order(); ++b) {
        out += (b ? " " : "") + std::to_string(g.product(a, b));
      }
      out += "\n";
    }
    return out;
  }

  inline std::string format_rms(ReesMatrixSemigroup const& s) {
    std::string out = "RMS\n" + format_group(s.group());
    out += "I " + std::to_string(s.i_count()) + "\n";
    out += "LAMBDA " + std::to_string(s.lambda_count()) + "\n";
    for (std::size_t l = 0; l < s.lambda_count(); ++l) {
      for (std::size_t i = 0; i < s.i_count(); ++i) {
        out += (i ? " " : "") + std::to_string(s.sandwich(l, i));
      }
      out += "\n";
    }
    return out;
  }

  using Artifact = std::variant<FiniteGroup, ReesMatrixSemigroup>;

  // Dispatches on the first keyword.
  inline Artifact parse_artifact(std::string text) {
    detail::LineReader probe(text);
    if (probe.done()) {
      throw ParseError(1, 1, "empty input");
    }
    auto const& first = probe.peek();
    if (first.tokens[0].text == "RMS") {
      return parse_rms(std::move(text));
    }
    if (first.tokens[0].text == "GROUP") {
      return parse_group(std::move(text));
    }
    throw ParseError(first.number, first.tokens[0].column,
                     "expected 'GROUP' or 'RMS'");
  }

  inline Artifact load_artifacts(std::string const& path) {
    return parse_artifact(detail::slurp(path));
  }

  inline FiniteGroup load_group(std::string const& path) {
    return parse_group(detail::slurp(path));
  }

  inline ReesMatrixSemigroup load_rms(std::string const& path) {
    return parse_rms(detail::slurp(path));
  }

}  // namespace csext

#endif  // CSEXT_IO_HPP_
