#include "linkpos/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace linkpos {

namespace {

// Final position of each strand after applying the letters as position
// transpositions, left to right. state[p-1] = strand currently at position p.
std::vector<int> permutation_of(const BraidWord& b) {
  std::vector<int> state(b.strands);
  std::iota(state.begin(), state.end(), 1);
  for (int j : b.letters) {
    int i = std::abs(j);
    std::swap(state[i - 1], state[i]);
  }
  std::vector<int> img(b.strands, 0);
  for (int pos = 1; pos <= b.strands; ++pos) img[state[pos - 1] - 1] = pos;
  return img;
}

std::vector<std::vector<int>> cycles_of(const BraidWord& b) {
  std::vector<int> img = permutation_of(b);
  std::vector<bool> seen(b.strands, false);
  std::vector<std::vector<int>> cycles;
  for (int s = 1; s <= b.strands; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    int cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      cyc.push_back(cur);
      cur = img[cur - 1];
    }
    std::sort(cyc.begin(), cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& c) { return a[0] < c[0]; });
  return cycles;
}

// The two strands crossed by each letter, in word order.
std::vector<std::pair<int, int>> crossing_strands(const BraidWord& b) {
  std::vector<int> state(b.strands);
  std::iota(state.begin(), state.end(), 1);
  std::vector<std::pair<int, int>> out;
  out.reserve(b.letters.size());
  for (int j : b.letters) {
    int i = std::abs(j);
    out.emplace_back(state[i - 1], state[i]);
    std::swap(state[i - 1], state[i]);
  }
  return out;
}

}  // namespace

void validate_braid(const BraidWord& b) {
  if (b.strands < 1)
    throw Error(ErrorKind::MalformedBraid, "strand count must be >= 1");
  for (int j : b.letters) {
    if (j == 0)
      throw Error(ErrorKind::MalformedBraid, "generator index 0 is invalid");
    int i = std::abs(j);
    if (i >= b.strands)
      throw Error(ErrorKind::GeneratorOutOfRange,
                  "generator " + std::to_string(j) + " out of range for " +
                      std::to_string(b.strands) + " strands");
  }
}

BraidWord parse_braid(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != 'B')
    throw Error(ErrorKind::MalformedBraid,
                "braid text must start with 'B<n>:'");
  ++pos;
  size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits)
    throw Error(ErrorKind::MalformedBraid, "missing strand count after 'B'");
  int strands = 0;
  try {
    strands = std::stoi(text.substr(digits, pos - digits));
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedBraid, "strand count out of range");
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != ':')
    throw Error(ErrorKind::MalformedBraid, "missing ':' after strand count");
  ++pos;

  BraidWord b;
  b.strands = strands;
  std::istringstream rest(text.substr(pos));
  std::string tok;
  while (rest >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedBraid, "bad letter '" + tok + "'");
    }
    if (used != tok.size())
      throw Error(ErrorKind::MalformedBraid, "bad letter '" + tok + "'");
    b.letters.push_back(v);
  }
  validate_braid(b);
  return b;
}

std::string serialize_braid(const BraidWord& b) {
  std::string out = "B" + std::to_string(b.strands) + ":";
  for (int j : b.letters) out += " " + std::to_string(j);
  return out;
}

long long LinkingMatrix::total() const {
  long long t = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j) t += entries[i][j];
  return t;
}

long long LinkingMatrix::abs_total() const {
  long long t = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      t += std::llabs(entries[i][j]);
  return t;
}

bool LinkingMatrix::any_negative() const {
  for (const auto& row : entries)
    for (int v : row)
      if (v < 0) return true;
  return false;
}

BraidProfile braid_profile(const BraidWord& b) {
  validate_braid(b);
  BraidProfile p;
  p.strands = b.strands;
  p.length = static_cast<int>(b.letters.size());
  p.writhe = 0;
  for (int j : b.letters) p.writhe += (j > 0) ? 1 : -1;
  p.self_linking = p.writhe - b.strands;
  p.permutation = permutation_of(b);
  p.component_cycles = cycles_of(b);
  p.is_positive =
      std::all_of(b.letters.begin(), b.letters.end(), [](int j) { return j > 0; });
  p.is_pure = true;
  for (int s = 1; s <= b.strands; ++s)
    if (p.permutation[s - 1] != s) p.is_pure = false;

  // Alternation conditions on generator signs. sign[i] = 0 absent, +1/-1
  // consistent, 2 mixed.
  std::vector<int> sign(b.strands, 0);
  for (int j : b.letters) {
    int i = std::abs(j);
    int s = (j > 0) ? 1 : -1;
    if (sign[i - 1] == 0)
      sign[i - 1] = s;
    else if (sign[i - 1] != s)
      sign[i - 1] = 2;
  }
  bool consistent = true;   // (ii)
  bool all_present = true;  // (i)
  bool adjacent_opposite = true;  // (iii)
  for (int i = 1; i <= b.strands - 1; ++i) {
    if (sign[i - 1] == 0) all_present = false;
    if (sign[i - 1] == 2) consistent = false;
  }
  for (int i = 1; i <= b.strands - 2; ++i) {
    int a = sign[i - 1], c = sign[i];
    if (a != 0 && c != 0 && a != 2 && c != 2 && a == c)
      adjacent_opposite = false;
  }
  p.is_alternating = consistent && adjacent_opposite;
  p.is_nonsplit_alternating = all_present && p.is_alternating;
  return p;
}

BraidWord sub_braid(const BraidWord& b, const std::vector<int>& keep_cycles) {
  validate_braid(b);
  if (keep_cycles.empty())
    throw Error(ErrorKind::EmptySelection, "no component cycles selected");
  auto cycles = cycles_of(b);
  std::set<int> keep;
  for (int ci : keep_cycles) {
    if (ci < 0 || ci >= static_cast<int>(cycles.size()))
      throw Error(ErrorKind::UnknownComponent,
                  "component cycle " + std::to_string(ci) + " does not exist");
    keep.insert(cycles[ci].begin(), cycles[ci].end());
  }
  BraidWord out;
  out.strands = static_cast<int>(keep.size());
  std::vector<int> state(b.strands);
  std::iota(state.begin(), state.end(), 1);
  for (int j : b.letters) {
    int i = std::abs(j);
    int sa = state[i - 1], sb = state[i];
    if (keep.count(sa) && keep.count(sb)) {
      int rank = 1;
      for (int q = 0; q < i - 1; ++q)
        if (keep.count(state[q])) ++rank;
      out.letters.push_back(j > 0 ? rank : -rank);
    }
    std::swap(state[i - 1], state[i]);
  }
  return out;
}

LinkingMatrix braid_linking_matrix(const BraidWord& b) {
  validate_braid(b);
  auto cycles = cycles_of(b);
  std::vector<int> which(b.strands + 1, -1);
  for (size_t idx = 0; idx < cycles.size(); ++idx)
    for (int s : cycles[idx]) which[s] = static_cast<int>(idx);
  int k = static_cast<int>(cycles.size());
  std::vector<std::vector<int>> acc(k, std::vector<int>(k, 0));
  std::vector<std::vector<int>> cnt(k, std::vector<int>(k, 0));
  auto strands = crossing_strands(b);
  for (size_t t = 0; t < b.letters.size(); ++t) {
    int ca = which[strands[t].first], cb = which[strands[t].second];
    if (ca == cb) continue;
    int s = (b.letters[t] > 0) ? 1 : -1;
    acc[ca][cb] += s;
    acc[cb][ca] += s;
    cnt[ca][cb] += 1;
    cnt[cb][ca] += 1;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (cnt[i][j] % 2 != 0)
        throw Error(ErrorKind::OddMixedCount,
                    "odd mixed letter count between cycles " +
                        std::to_string(i) + "," + std::to_string(j));
      acc[i][j] /= 2;
    }
  return LinkingMatrix{std::move(acc)};
}

KeyLemmaRecord key_lemma_identity(const BraidWord& b,
                                  const ComponentPartition& partition) {
  BraidProfile p = braid_profile(b);
  int k = static_cast<int>(p.component_cycles.size());
  std::vector<int> owner(k, -1);
  for (size_t bi = 0; bi < partition.size(); ++bi) {
    if (partition[bi].empty())
      throw Error(ErrorKind::InvalidPartition, "empty partition block");
    for (int ci : partition[bi]) {
      if (ci < 0 || ci >= k)
        throw Error(ErrorKind::InvalidPartition,
                    "cycle index " + std::to_string(ci) + " out of range");
      if (owner[ci] != -1)
        throw Error(ErrorKind::InvalidPartition,
                    "cycle " + std::to_string(ci) + " in two blocks");
      owner[ci] = static_cast<int>(bi);
    }
  }
  for (int ci = 0; ci < k; ++ci)
    if (owner[ci] == -1)
      throw Error(ErrorKind::InvalidPartition,
                  "cycle " + std::to_string(ci) + " not covered");

  KeyLemmaRecord rec;
  rec.total_self_linking = p.self_linking;
  long long sum_sub = 0;
  for (const auto& block : partition) {
    BraidWord sb = sub_braid(b, block);
    BraidProfile sp = braid_profile(sb);
    rec.block_self_linking.push_back(sp.self_linking);
    sum_sub += sp.self_linking;
  }
  rec.lhs = rec.total_self_linking - sum_sub;

  LinkingMatrix lk = braid_linking_matrix(b);
  long long cross = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (owner[i] != owner[j]) cross += lk.entries[i][j];
  rec.rhs = 2 * cross;
  rec.holds = (rec.lhs == rec.rhs);
  return rec;
}

std::vector<int> factor_letters(const QuasipositiveEmbedding::Factor& f) {
  std::vector<int> out(f.conjugator);
  out.push_back(f.generator);
  for (auto it = f.conjugator.rbegin(); it != f.conjugator.rend(); ++it)
    out.push_back(-*it);
  return out;
}

std::vector<int> decomposition_product(
    const std::vector<QuasipositiveEmbedding::Factor>& factors) {
  // Cancellation is only ever needed where one conjugate factor closes with
  // +i and the next opens with -i; a plain generator factor seals the word
  // so far (otherwise an original positive letter could cancel into the
  // following insertion and the product would over-reduce).
  std::vector<int> word;
  size_t floor = 0;
  for (const auto& f : factors) {
    if (f.conjugator.empty()) {
      word.push_back(f.generator);
      floor = word.size();
      continue;
    }
    for (int j : factor_letters(f)) {
      if (word.size() > floor && word.back() == -j)
        word.pop_back();
      else
        word.push_back(j);
    }
  }
  return word;
}

QuasipositiveEmbedding embed_quasipositive(const BraidWord& b) {
  validate_braid(b);
  int n = b.strands;
  QuasipositiveEmbedding e;
  e.input = b;
  e.output.strands = n + 1;
  for (size_t t = 0; t < b.letters.size(); ++t) {
    int j = b.letters[t];
    if (j > 0) {
      e.output.letters.push_back(j);
      e.decomposition.push_back({{}, j});
      continue;
    }
    int i = -j;
    e.output.letters.push_back(j);
    // Inserted word: descent n..i, then ascent i..n (top generator n of
    // B_{n+1}).
    std::vector<int> w;
    for (int g = n; g >= i; --g) w.push_back(g);
    for (int g = i; g <= n; ++g) w.push_back(g);
    e.output.letters.insert(e.output.letters.end(), w.begin(), w.end());
    e.insertions.emplace_back(static_cast<int>(t), w);
    // sigma_i^{-1} (n .. i+1) i == product of conjugates (-i, g, i) for
    // g = n down to i+1 after free cancellation; the trailing ascent letters
    // i, i+1, .., n are plain positive factors.
    for (int g = n; g >= i + 1; --g)
      e.decomposition.push_back({{-i}, g});
    for (int g = i; g <= n; ++g)
      e.decomposition.push_back({{}, g});
    e.new_component_linking += n - i + 1;
  }
  return e;
}

}  // namespace linkpos
