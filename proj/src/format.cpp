#include "format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "error.hpp"

namespace glued {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Int parse_int(const std::string& t, const char* what) {
  try {
    // mpz_class rejects garbage with std::invalid_argument
    return Int(t);
  } catch (const std::exception&) {
    fail(Status::ParseError, std::string("invalid integer '") + t + "' in " + what);
  }
}

std::size_t parse_index(const std::string& t, std::size_t n, const char* what,
                        Status bad = Status::ParseError) {
  Int v = 0;
  try {
    v = Int(t);
  } catch (const std::exception&) {
    fail(bad, std::string("invalid generator index '") + t + "' in " + what);
  }
  if (v < 1 || v > Int(static_cast<unsigned long>(n)))
    fail(bad, std::string("generator index ") + t + " out of range in " + what);
  return v.get_ui() - 1;
}

// "1-4" or single "3"; appends 0-based indices.
void parse_index_range(const std::string& piece, std::size_t n,
                       std::vector<std::size_t>& out) {
  std::size_t dash = piece.find('-');
  if (dash == std::string::npos) {
    out.push_back(parse_index(piece, n, "split", Status::BadSplit));
    return;
  }
  std::size_t a = parse_index(piece.substr(0, dash), n, "split", Status::BadSplit);
  std::size_t b = parse_index(piece.substr(dash + 1), n, "split", Status::BadSplit);
  if (b < a) fail(Status::BadSplit, "descending index range in split");
  for (std::size_t i = a; i <= b; ++i) out.push_back(i);
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::string piece;
  std::istringstream in(text);
  bool any = false;
  while (std::getline(in, piece, ',')) {
    piece = trim(piece);
    if (piece.empty()) fail(Status::BadSplit, "empty entry in split index list");
    // allow space-separated entries inside one comma piece
    for (const std::string& t : tokens_of(piece)) {
      parse_index_range(t, n, out);
      any = true;
    }
  }
  if (!any) fail(Status::BadSplit, "empty split side");
  return out;
}

SemigroupFile parse_semigroupfile_lines(const std::vector<std::string>& lines) {
  std::optional<std::size_t> free_rank;
  std::optional<std::vector<Int>> torsion;
  struct RawGen {
    std::vector<std::string> head;  // tokens before ';' (or all tokens)
    std::optional<std::vector<std::string>> tail;
  };
  std::vector<RawGen> raw_gens;
  std::vector<std::pair<std::string, std::string>> raw_splits;

  for (const std::string& full : lines) {
    std::string line = full;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(Status::ParseError, "expected 'key: value', got '" + line + "'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "free_rank") {
      if (free_rank) fail(Status::ParseError, "duplicate free_rank line");
      Int v = parse_int(value, "free_rank");
      if (v < 0 || v > 1024) fail(Status::ParseError, "free_rank out of range");
      free_rank = v.get_ui();
    } else if (key == "torsion") {
      if (torsion) fail(Status::ParseError, "duplicate torsion line");
      std::vector<Int> orders;
      for (const std::string& t : tokens_of(value)) {
        Int d = parse_int(t, "torsion");
        if (d < 2) fail(Status::ParseError, "torsion orders must be at least 2");
        orders.push_back(d);
      }
      torsion = std::move(orders);
    } else if (key == "gen") {
      std::size_t semi = value.find(';');
      RawGen g;
      if (semi == std::string::npos) {
        g.head = tokens_of(value);
      } else {
        g.head = tokens_of(value.substr(0, semi));
        g.tail = tokens_of(value.substr(semi + 1));
      }
      raw_gens.push_back(std::move(g));
    } else if (key == "split") {
      std::vector<std::string> toks = tokens_of(value);
      if (toks.empty()) fail(Status::ParseError, "split line needs a name");
      std::string name = toks.front();
      std::string rest = trim(value.substr(value.find(name) + name.size()));
      raw_splits.emplace_back(std::move(name), std::move(rest));
    } else {
      fail(Status::ParseError, "unknown key '" + key + "'");
    }
  }

  if (!free_rank) fail(Status::ParseError, "missing free_rank line");
  SemigroupFile f;
  f.free_rank = *free_rank;
  f.torsion_orders = torsion.value_or(std::vector<Int>{});

  for (const RawGen& g : raw_gens) {
    const std::vector<std::string>* tparts = nullptr;
    const std::vector<std::string>* fparts = nullptr;
    if (g.tail) {
      tparts = &g.head;
      fparts = &*g.tail;
    } else {
      fparts = &g.head;
    }
    if (f.torsion_orders.empty()) {
      if (tparts && !tparts->empty())
        fail(Status::ParseError, "gen line has torsion coordinates but no torsion orders");
    } else if (!tparts || tparts->size() != f.torsion_orders.size()) {
      fail(Status::ParseError, "gen line needs exactly " +
                                   std::to_string(f.torsion_orders.size()) +
                                   " torsion coordinates before ';'");
    }
    if (fparts->size() != f.free_rank)
      fail(Status::ParseError, "gen line needs exactly " + std::to_string(f.free_rank) +
                                   " free coordinates");
    Vec tv, fv;
    if (!f.torsion_orders.empty())
      for (const std::string& t : *tparts) tv.push_back(parse_int(t, "gen"));
    for (const std::string& t : *fparts) fv.push_back(parse_int(t, "gen"));
    f.generators.push_back(f.group().element(std::move(tv), std::move(fv)));
  }
  if (f.generators.empty()) fail(Status::ParseError, "no generators given");

  for (const auto& [name, rest] : raw_splits) {
    std::size_t bar = rest.find('|');
    if (bar == std::string::npos)
      fail(Status::ParseError, "split '" + name + "' needs a '|' separator");
    std::vector<std::size_t> left, right;
    try {
      for (const std::string& t : tokens_of(rest.substr(0, bar)))
        parse_index_range(t, f.generators.size(), left);
      for (const std::string& t : tokens_of(rest.substr(bar + 1)))
        parse_index_range(t, f.generators.size(), right);
      SplitSpec sp = SplitSpec::from_left(f.generators.size(), left);
      if (sp.right != [&] {
            std::vector<std::size_t> r = right;
            std::sort(r.begin(), r.end());
            return r;
          }())
        fail(Status::BadSplit, "split sides do not partition the generators");
      left = sp.left;
    } catch (const Error& e) {
      fail(Status::ParseError, "split '" + name + "': " + e.what());
    }
    for (const NamedSplit& other : f.splits)
      if (other.name == name) fail(Status::ParseError, "duplicate split name '" + name + "'");
    f.splits.push_back(NamedSplit{name, std::move(left)});
  }
  return f;
}

}  // namespace

SemigroupFile parse_semigroup_file(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return parse_semigroupfile_lines(lines);
}

SemigroupFile read_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Status::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semigroup_file(buf.str());
}

std::string serialize_semigroup_file(const SemigroupFile& f) {
  std::ostringstream out;
  out << "free_rank: " << f.free_rank << "\n";
  if (!f.torsion_orders.empty()) {
    out << "torsion:";
    for (const Int& d : f.torsion_orders) out << ' ' << d.get_str();
    out << "\n";
  }
  for (const GroupElement& g : f.generators) {
    out << "gen:";
    if (!f.torsion_orders.empty()) {
      for (const Int& v : g.torsion) out << ' ' << v.get_str();
      out << " ;";
    }
    for (const Int& v : g.free_part) out << ' ' << v.get_str();
    out << "\n";
  }
  for (const NamedSplit& sp : f.splits) {
    out << "split: " << sp.name;
    for (std::size_t i : sp.left) out << ' ' << i + 1;
    out << " |";
    SplitSpec full = SplitSpec::from_left(f.generators.size(), sp.left);
    for (std::size_t i : full.right) out << ' ' << i + 1;
    out << "\n";
  }
  return out.str();
}

SemigroupFile file_from_semigroup(const Semigroup& s, std::vector<NamedSplit> splits) {
  SemigroupFile f;
  f.free_rank = s.group().free_rank();
  f.torsion_orders = s.group().torsion_orders();
  f.generators = s.generators();
  f.splits = std::move(splits);
  return f;
}

SplitSpec parse_split_arg(const std::string& text, std::size_t n_generators,
                          const std::vector<NamedSplit>& named) {
  std::string spec = trim(text);
  if (spec.empty()) fail(Status::BadSplit, "empty split spec");
  std::size_t bar = spec.find('|');
  if (bar == std::string::npos) {
    for (const NamedSplit& sp : named)
      if (sp.name == spec) return SplitSpec::from_left(n_generators, sp.left);
    fail(Status::BadSplit, "unknown split name '" + spec + "'");
  }
  std::vector<std::size_t> left = parse_index_list(spec.substr(0, bar), n_generators);
  std::vector<std::size_t> right = parse_index_list(spec.substr(bar + 1), n_generators);
  SplitSpec sp = SplitSpec::from_left(n_generators, left);
  std::sort(right.begin(), right.end());
  if (sp.right != right) fail(Status::BadSplit, "split sides do not partition the generators");
  return sp;
}

GroupElement parse_degree_arg(const std::string& text, const AbelianGroup& g) {
  std::string spec = trim(text);
  if (!spec.empty() && spec.front() == '(' && spec.back() == ')')
    spec = trim(spec.substr(1, spec.size() - 2));
  std::string tpart, fpart;
  std::size_t semi = spec.find(';');
  if (semi == std::string::npos) {
    fpart = spec;
  } else {
    tpart = spec.substr(0, semi);
    fpart = spec.substr(semi + 1);
  }
  auto values = [](const std::string& s, const char* what) {
    std::string normalized = s;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    Vec out;
    for (const std::string& t : tokens_of(normalized)) {
      try {
        out.push_back(Int(t));
      } catch (const std::exception&) {
        fail(Status::BadArgument, std::string("invalid integer '") + t + "' in " + what);
      }
    }
    return out;
  };
  Vec tv = values(tpart, "degree");
  Vec fv = values(fpart, "degree");
  if (tv.size() != g.torsion_rank())
    fail(Status::BadArgument, "degree needs " + std::to_string(g.torsion_rank()) +
                                  " torsion coordinates");
  if (fv.size() != g.free_rank())
    fail(Status::BadArgument,
         "degree needs " + std::to_string(g.free_rank()) + " free coordinates");
  return g.element(std::move(tv), std::move(fv));
}

Vec parse_int_list(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  Vec out;
  for (const std::string& t : tokens_of(normalized)) {
    try {
      out.push_back(Int(t));
    } catch (const std::exception&) {
      fail(Status::BadArgument, std::string("invalid integer '") + t + "'");
    }
  }
  if (out.empty()) fail(Status::BadArgument, "empty integer list");
  return out;
}

}  // namespace glued
