#include "tate/fixture.hpp"

#include <fstream>
#include <sstream>

namespace tate {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment and surrounding whitespace removed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    out.push_back(Line{number, trim(raw)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

bool starts_with_word(const std::string& s, std::string_view word) {
  return s.rfind(word, 0) == 0 && (s.size() == word.size() || s[word.size()] == ' ' || s[word.size()] == '\t' || s[word.size()] == ':');
}

std::string after_keyword(const std::string& s, std::string_view word) {
  std::string rest = trim(std::string_view(s).substr(word.size()));
  if (!rest.empty() && rest.front() == ':') rest = trim(std::string_view(rest).substr(1));
  return rest;
}

long parse_positive(const std::string& s, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer ") + what);
  }
  if (used != s.size() || v <= 0) throw ParseError(line, std::string("expected a positive integer ") + what);
  return v;
}

bool is_keyword_line(const std::string& s) {
  return starts_with_word(s, "subgroup") || starts_with_word(s, "conductor") || starts_with_word(s, "degree") ||
         starts_with_word(s, "subfieldK") || starts_with_word(s, "points");
}

std::vector<Permutation> parse_perm_list(const std::string& s, std::size_t points, std::size_t line) {
  std::vector<Permutation> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(Permutation::parse_cycles(item, points));
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  return out;
}

}  // namespace

std::vector<Cyclotomic> parse_literal_row(std::string_view row) {
  std::vector<std::string> tokens;
  std::stringstream in{std::string(row)};
  std::string tok;
  while (std::getline(in, tok, ',')) tokens.push_back(trim(tok));
  std::vector<Cyclotomic> out;
  if (row.find(':') == std::string_view::npos) {
    for (const auto& t : tokens) out.emplace_back(parse_rational(t));
    return out;
  }
  std::string literal;
  for (const auto& t : tokens) {
    if (t.find(':') != std::string::npos) {
      if (!literal.empty()) out.push_back(Cyclotomic::parse(literal));
      literal = t;
    } else {
      if (literal.empty()) throw InvalidArgument("coefficient '" + t + "' before any literal");
      literal += "," + t;
    }
  }
  if (!literal.empty()) out.push_back(Cyclotomic::parse(literal));
  return out;
}

ModelFixture parse_model(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && lines[i].text.empty()) ++i;
  };
  auto last_line = [&] { return lines.empty() ? std::size_t{1} : lines.back().number; };

  skip_blank();
  if (i == lines.size() || !starts_with_word(lines[i].text, "points")) {
    throw ParseError(i < lines.size() ? lines[i].number : last_line(), "expected 'points P'");
  }
  const auto points = static_cast<std::size_t>(parse_positive(after_keyword(lines[i].text, "points"), lines[i].number, "after 'points'"));
  if (points > kMaxPoints) throw ParseError(lines[i].number, "at most " + std::to_string(kMaxPoints) + " points");
  ++i;

  std::vector<Permutation> gens;
  skip_blank();
  while (i < lines.size() && !lines[i].text.empty() && !is_keyword_line(lines[i].text)) {
    try {
      gens.push_back(Permutation::parse_cycles(lines[i].text, points));
    } catch (const Error& e) {
      throw ParseError(lines[i].number, e.what());
    }
    ++i;
  }
  const GroupPtr group = FiniteGroup::from_generators(gens, points);

  skip_blank();
  std::vector<std::size_t> sub_lines;
  if (i < lines.size() && starts_with_word(lines[i].text, "subgroup")) {
    std::stringstream in(after_keyword(lines[i].text, "subgroup"));
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (item.front() == 'g') item.erase(0, 1);
      const auto k = static_cast<std::size_t>(parse_positive(item, lines[i].number, "in subgroup list"));
      if (k > gens.size()) throw ParseError(lines[i].number, "subgroup refers to missing generator g" + std::to_string(k));
      sub_lines.push_back(k - 1);
    }
    ++i;
  } else {
    for (std::size_t k = 0; k < gens.size(); ++k) sub_lines.push_back(k);
  }
  std::vector<Elem> sub_elems;
  for (auto k : sub_lines) sub_elems.push_back(group->generators()[k]);
  Subgroup h(group, sub_elems);

  skip_blank();
  if (i == lines.size() || !starts_with_word(lines[i].text, "conductor")) {
    throw ParseError(i < lines.size() ? lines[i].number : last_line(), "expected 'conductor N'");
  }
  const long conductor = parse_positive(after_keyword(lines[i].text, "conductor"), lines[i].number, "after 'conductor'");
  if (conductor > 120) throw ParseError(lines[i].number, "conductor exceeds 120");
  ++i;
  skip_blank();
  std::size_t degree = 0;
  if (i < lines.size() && starts_with_word(lines[i].text, "degree")) {
    degree = static_cast<std::size_t>(parse_positive(after_keyword(lines[i].text, "degree"), lines[i].number, "after 'degree'"));
    ++i;
  }

  std::vector<ExactMatrix> images;
  for (std::size_t s = 0; s < sub_lines.size(); ++s) {
    std::vector<Cyclotomic> entries;
    std::size_t rows = 0;
    while (degree == 0 || rows < degree) {
      skip_blank();
      if (i == lines.size() || is_keyword_line(lines[i].text)) {
        throw ParseError(i < lines.size() ? lines[i].number : last_line(),
                         "missing matrix rows for generator g" + std::to_string(sub_lines[s] + 1));
      }
      std::vector<Cyclotomic> row;
      try {
        row = parse_literal_row(lines[i].text);
      } catch (const Error& e) {
        throw ParseError(lines[i].number, e.what());
      }
      if (degree == 0) degree = row.size();
      if (row.size() != degree) {
        throw ParseError(lines[i].number, "expected " + std::to_string(degree) + " entries, found " + std::to_string(row.size()));
      }
      for (auto& x : row) {
        if (conductor % x.conductor() != 0) {
          throw ParseError(lines[i].number, "literal conductor " + std::to_string(x.conductor()) + " does not divide " + std::to_string(conductor));
        }
        entries.push_back(x.embed(static_cast<int>(conductor)));
      }
      ++rows;
      ++i;
    }
    images.emplace_back(degree, degree, std::move(entries));
  }

  std::optional<Subgroup> k;
  skip_blank();
  if (i < lines.size() && starts_with_word(lines[i].text, "subfieldK")) {
    const auto perms = parse_perm_list(after_keyword(lines[i].text, "subfieldK"), points, lines[i].number);
    std::vector<Elem> seeds;
    for (const auto& p : perms) {
      const auto idx = h.group()->index_of(p);
      if (!idx) throw ParseError(lines[i].number, "subfieldK element " + p.to_cycles() + " is not in H");
      seeds.push_back(*idx);
    }
    k.emplace(h.group(), seeds);
    ++i;
  }
  skip_blank();
  if (i < lines.size()) throw ParseError(lines[i].number, "unexpected line '" + lines[i].text + "'");

  MatrixRep rho = images.empty() ? MatrixRep::trivial(h.group(), degree == 0 ? 1 : degree)
                                 : MatrixRep::from_generator_images(h.group(), std::move(images));
  return ModelFixture{group, std::move(sub_lines), std::move(h), std::move(rho), std::move(k)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ModelFixture load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

std::string write_rep_model(const MatrixRep& rho) {
  const auto& g = *rho.group();
  std::ostringstream out;
  out << "points " << g.points() << '\n';
  for (const auto& p : g.generator_perms()) out << p.to_cycles() << '\n';
  out << "\nconductor " << rho.conductor() << '\n';
  out << "degree " << rho.degree() << '\n';
  for (Elem s : g.generators()) {
    const auto& m = rho(s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out << ", ";
        out << m(r, c).embed(rho.conductor()).to_string();
      }
      out << '\n';
    }
  }
  return out.str();
}

std::vector<ModlRep::Matrix> parse_modl_generators(std::string_view text, unsigned ell) {
  if (ell < 2) throw PrimeBound("ell = " + std::to_string(ell) + " is not a prime in [2, 13]");
  const long p = ell;
  std::vector<ModlRep::Matrix> out;
  std::stringstream in{std::string(text)};
  std::string block;
  while (std::getline(in, block, ';')) {
    std::stringstream entries(block);
    std::string e;
    std::vector<long> values;
    while (std::getline(entries, e, ',')) {
      e = trim(e);
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(e, &used);
      } catch (const std::exception&) {
        throw InvalidArgument("bad matrix entry '" + e + "'");
      }
      if (used != e.size()) throw InvalidArgument("bad matrix entry '" + e + "'");
      values.push_back(v);
    }
    if (values.size() != 4) throw InvalidArgument("each matrix needs 4 entries");
    ModlRep::Matrix m{};
    for (std::size_t j = 0; j < 4; ++j) m[j] = static_cast<unsigned>(((values[j] % p) + p) % p);
    out.push_back(m);
  }
  if (out.empty()) throw InvalidArgument("no generator matrices");
  return out;
}

ModlRep parse_modl(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].text.empty()) ++i;
  if (i == lines.size() || !starts_with_word(lines[i].text, "ell")) {
    throw ParseError(i < lines.size() ? lines[i].number : 1, "expected 'ell p'");
  }
  const auto ell = parse_positive(after_keyword(lines[i].text, "ell"), lines[i].number, "after 'ell'");
  ++i;
  std::vector<long> values;
  std::vector<std::size_t> origin;
  for (; i < lines.size(); ++i) {
    std::stringstream in(lines[i].text);
    std::string tok;
    std::size_t count = 0;
    while (in >> tok) {
      for (auto& c : tok) {
        if (c == ',') c = ' ';
      }
      std::stringstream parts(tok);
      long v = 0;
      while (parts >> v) {
        values.push_back(v);
        origin.push_back(lines[i].number);
        ++count;
      }
      if (!parts.eof()) throw ParseError(lines[i].number, "bad integer '" + tok + "'");
    }
    if (count != 0 && count != 2) throw ParseError(lines[i].number, "matrix rows have two entries");
  }
  if (values.empty() || values.size() % 4 != 0) {
    throw ParseError(origin.empty() ? lines.back().number : origin.back(), "incomplete 2x2 matrix");
  }
  std::vector<ModlRep::Matrix> gens;
  for (std::size_t j = 0; j < values.size(); j += 4) {
    ModlRep::Matrix m{};
    for (std::size_t t = 0; t < 4; ++t) m[t] = static_cast<unsigned>(((values[j + t] % ell) + ell) % ell);
    gens.push_back(m);
  }
  return ModlRep(static_cast<unsigned>(ell), std::move(gens));
}

}  // namespace tate
