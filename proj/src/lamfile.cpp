#include "lamina/lamfile.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

namespace lamina {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int parse_int(const Token& t, std::size_t line, int min_value) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      t.text.size() > 9) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  }
  int v = std::stoi(t.text);
  if (v < min_value) throw ParseError(line, t.column, "value " + t.text + " is below " + std::to_string(min_value));
  return v;
}

AngleClass parse_angles(const std::vector<Token>& tokens, std::size_t first, std::size_t last, std::size_t line) {
  std::vector<Angle> angles;
  for (std::size_t i = first; i < last; ++i) {
    Angle a;
    try {
      a = Angle::parse(tokens[i].text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, tokens[i].column, e.what());
    }
    if (std::find(angles.begin(), angles.end(), a) != angles.end()) {
      throw ParseError(line, tokens[i].column, "duplicate angle " + a.str());
    }
    angles.push_back(a);
  }
  return AngleClass(std::move(angles));
}

struct Located {
  AngleClass cls;
  int level;
  std::size_t line;
};

}  // namespace

LamFile parse_lam(std::string_view text, bool reject_linked) {
  LamFile file;
  std::optional<int> degree, depth;
  std::optional<Mode> mode;
  std::vector<Located> classes;
  struct RawPre {
    std::size_t index;
    AngleClass cls;
    std::size_t line;
    std::size_t column;
  };
  std::vector<RawPre> pres;

  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0].text;
    auto need = [&](std::size_t n) {
      if (tokens.size() != n) {
        std::size_t col = tokens.size() > n ? tokens[n].column : tokens.back().column;
        throw ParseError(line, col, "'" + key + "' takes " + std::to_string(n - 1) + " argument(s)");
      }
    };
    if (key == "degree") {
      need(2);
      if (degree) throw ParseError(line, 1, "duplicate degree line");
      degree = parse_int(tokens[1], line, 2);
    } else if (key == "depth") {
      need(2);
      if (depth) throw ParseError(line, 1, "duplicate depth line");
      depth = parse_int(tokens[1], line, 0);
    } else if (key == "mode") {
      need(2);
      if (mode) throw ParseError(line, 1, "duplicate mode line");
      if (tokens[1].text == "equivalence") {
        mode = Mode::Equivalence;
      } else if (tokens[1].text == "geometric") {
        mode = Mode::Geometric;
      } else {
        throw ParseError(line, tokens[1].column, "unknown mode '" + tokens[1].text + "'");
      }
    } else if (key == "class") {
      std::size_t end = tokens.size();
      int level = 0;
      if (end >= 3 && tokens[end - 2].text == "level") {
        level = parse_int(tokens[end - 1], line, 0);
        end -= 2;
      }
      if (end < 3) throw ParseError(line, tokens[0].column, "a class needs at least two angles");
      classes.push_back({parse_angles(tokens, 1, end, line), level, line});
    } else if (key == "preimage-of") {
      if (tokens.size() < 2) throw ParseError(line, tokens[0].column, "missing generator index");
      std::size_t next = 2;
      Token idx = tokens[1];
      if (!idx.text.empty() && idx.text.back() == ':') {
        idx.text.pop_back();
      } else if (tokens.size() > 2 && tokens[2].text == ":") {
        next = 3;
      } else {
        throw ParseError(line, tokens[1].column, "expected '<index>:'");
      }
      std::size_t index = static_cast<std::size_t>(parse_int(idx, line, 0));
      if (tokens.size() - next < 2) throw ParseError(line, tokens[0].column, "a preimage needs at least two angles");
      pres.push_back({index, parse_angles(tokens, next, tokens.size(), line), line, tokens[1].column});
    } else {
      throw ParseError(line, tokens[0].column, "unknown keyword '" + key + "'");
    }
  }
  if (!degree) throw ParseError(lines.size() + 1, 1, "missing degree line");
  file.degree = *degree;
  file.depth = depth.value_or(0);
  file.mode = mode.value_or(Mode::Equivalence);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const AngleClass& a = classes[j].cls;
      const AngleClass& b = classes[i].cls;
      bool ok = a != b && (!reject_linked || (file.mode == Mode::Equivalence ? unlinked(a, b) : non_crossing(a, b)));
      if (!ok) {
        throw ParseError(classes[i].line, 1,
                         std::string(a == b ? "duplicate" : "linked") + " classes " + a.str() + " and " + b.str() +
                             " (line " + std::to_string(classes[j].line) + ")");
      }
    }
  }

  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return classes[x].cls < classes[y].cls; });
  std::vector<std::size_t> rank(classes.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    file.classes.push_back(classes[order[r]].cls);
    file.levels.push_back(classes[order[r]].level);
  }
  for (const RawPre& p : pres) {
    if (p.index >= classes.size()) {
      throw ParseError(p.line, p.column, "preimage refers to missing class " + std::to_string(p.index));
    }
    file.preimages.push_back({rank[p.index], p.cls});
  }
  std::sort(file.preimages.begin(), file.preimages.end(), [](const ExplicitPreimage& a, const ExplicitPreimage& b) {
    return std::tie(a.generator, a.preimage) < std::tie(b.generator, b.preimage);
  });
  return file;
}

namespace {

std::string join(const AngleClass& c) {
  std::string out;
  for (const Angle& a : c) out += " " + a.str();
  return out;
}

}  // namespace

std::string serialize(const LamFile& file) {
  std::vector<std::size_t> order(file.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return file.classes[x] < file.classes[y]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::ostringstream out;
  out << "degree " << file.degree << "\n";
  out << "mode " << to_string(file.mode) << "\n";
  out << "depth " << file.depth << "\n";
  for (std::size_t i : order) {
    out << "class" << join(file.classes[i]);
    int level = i < file.levels.size() ? file.levels[i] : 0;
    if (level) out << " level " << level;
    out << "\n";
  }
  std::vector<ExplicitPreimage> pres = file.preimages;
  for (auto& p : pres) p.generator = rank.at(p.generator);
  std::sort(pres.begin(), pres.end(), [](const ExplicitPreimage& a, const ExplicitPreimage& b) {
    return std::tie(a.generator, a.preimage) < std::tie(b.generator, b.preimage);
  });
  for (const auto& p : pres) out << "preimage-of " << p.generator << ":" << join(p.preimage) << "\n";
  return out.str();
}

Lamination to_lamination(const LamFile& file) {
  Lamination lam(file.degree, file.mode, file.depth);
  for (std::size_t i = 0; i < file.classes.size(); ++i) {
    int level = i < file.levels.size() ? file.levels[i] : 0;
    lam.add(file.classes[i], {Provenance::Kind::Input, level});
  }
  return lam;
}

LamFile from_lamination(const Lamination& lam) {
  LamFile file;
  file.degree = lam.degree();
  file.mode = lam.mode();
  file.depth = lam.depth();
  for (std::size_t i = 0; i < lam.size(); ++i) {
    file.classes.push_back(lam[i]);
    file.levels.push_back(lam.provenance()[i].level);
  }
  return file;
}

FamilyFile parse_family(std::string_view text) {
  FamilyFile file;
  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (tokens[0].text != "set") throw ParseError(ln + 1, tokens[0].column, "unknown keyword '" + tokens[0].text + "'");
    if (tokens.size() < 2) throw ParseError(ln + 1, tokens[0].column, "a set needs at least one angle");
    file.sets.push_back(parse_angles(tokens, 1, tokens.size(), ln + 1));
  }
  std::sort(file.sets.begin(), file.sets.end());
  return file;
}

std::string serialize(const FamilyFile& file) {
  std::vector<AngleClass> sets = file.sets;
  std::sort(sets.begin(), sets.end());
  std::string out;
  for (const AngleClass& s : sets) out += "set" + join(s) + "\n";
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lamina
