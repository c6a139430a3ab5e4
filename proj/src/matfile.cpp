#include "rees/matfile.hpp"

#include <istream>
#include <sstream>

namespace rees {

namespace {

// Strip comments, return whitespace-separated tokens with line numbers.
struct Tok {
  std::string text;
  int line;
};

std::vector<Tok> tokenize(std::istream& in) {
  std::vector<Tok> toks;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) toks.push_back({w, lineno});
  }
  return toks;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, 0);
}

long parse_int(const Tok& t, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail(t.line, "expected " + what + ", got '" + t.text + "'");
  }
}

// "key=value" with a fixed key.
std::string kv(const Tok& t, const std::string& key) {
  auto eq = t.text.find('=');
  if (eq == std::string::npos || t.text.substr(0, eq) != key)
    fail(t.line, "expected '" + key + "=...', got '" + t.text + "'");
  return t.text.substr(eq + 1);
}

}  // namespace

PolyMatrix matfile_parse(std::istream& in) {
  std::vector<Tok> toks = tokenize(in);
  std::size_t i = 0;
  auto need = [&](const std::string& what) -> const Tok& {
    if (i >= toks.size())
      fail(toks.empty() ? 1 : toks.back().line,
           "unexpected end of file, expected " + what);
    return toks[i++];
  };

  const Tok& kw = need("'ring'");
  if (kw.text != "ring") fail(kw.line, "expected 'ring', got '" + kw.text + "'");
  const Tok& dt = need("d=<int>");
  long d = 0;
  {
    Tok tmp{kv(dt, "d"), dt.line};
    d = parse_int(tmp, "integer d");
  }
  const Tok& tt = need("T=<int>");
  long m = 0;
  {
    Tok tmp{kv(tt, "T"), tt.line};
    m = parse_int(tmp, "integer T");
  }
  const Tok& ft = need("field=<p|QQ>");
  std::string fv = kv(ft, "field");
  Field field = Field::rationals();
  if (fv != "QQ") {
    Tok tmp{fv, ft.line};
    long p = parse_int(tmp, "prime modulus or QQ");
    if (p < 2) fail(ft.line, "field modulus must be at least 2");
    try {
      field = Field::prime(static_cast<std::uint64_t>(p));
    } catch (const Error& e) {
      fail(ft.line, e.what());
    }
  }
  if (d < 1 || m < 1) fail(dt.line, "ring needs d >= 1 and T >= 1");
  RingSpec ring = make_ring(field, static_cast<int>(d), static_cast<int>(m));

  const Tok& mk = need("'matrix'");
  if (mk.text != "matrix")
    fail(mk.line, "expected 'matrix', got '" + mk.text + "'");
  long rows = parse_int(need("row count"), "row count");
  long cols = parse_int(need("column count"), "column count");
  if (rows < 1 || cols < 1) fail(mk.line, "matrix dimensions must be positive");

  PolyMatrix M(ring, static_cast<int>(rows), static_cast<int>(cols));
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      const Tok& e = need("matrix entry");
      try {
        M.set(static_cast<int>(r), static_cast<int>(c),
              poly_parse(e.text, ring));
      } catch (const ParseError& pe) {
        fail(e.line, "entry (" + std::to_string(r + 1) + "," +
                         std::to_string(c + 1) + "): " + pe.what());
      }
    }
  }
  if (i != toks.size()) fail(toks[i].line, "trailing input after matrix body");
  return M;
}

PolyMatrix matfile_parse_string(const std::string& text) {
  std::istringstream in(text);
  return matfile_parse(in);
}

std::string matfile_write(const PolyMatrix& M,
                          const std::vector<std::string>& header_comment) {
  const RingSpec& R = M.ring();
  std::ostringstream out;
  for (const auto& line : header_comment) out << "# " << line << "\n";
  out << "ring d=" << R.d << " T=" << R.m << " field=";
  if (R.field.kind() == FieldKind::rational)
    out << "QQ";
  else
    out << R.field.modulus();
  out << "\n";
  out << "matrix " << M.rows() << " " << M.cols() << "\n";
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (j) out << " ";
      out << M.at(i, j).str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rees
