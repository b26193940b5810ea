#include <algorithm>

#include "mbqc/verify.hpp"

namespace mbqc {

std::vector<SequenceItem> channel_sequence(const MbqcGrid& g, int channel) {
  std::vector<SequenceItem> out;
  int xs = 0;
  auto flush = [&] {
    if (xs % 2) out.push_back({Basis::X, 0.0});
    xs = 0;
  };
  for (Coord c : g.channels.at(channel)) {
    const Measurement m = g.at(c);
    if (m.basis == Basis::X) {
      ++xs;
      continue;
    }
    flush();
    out.push_back({m.basis, m.basis == Basis::Theta ? m.angle : 0.0});
  }
  flush();
  return out;
}

std::vector<int> EquivalenceReport::mismatched() const {
  std::vector<int> out;
  for (const auto& c : channels)
    if (!c.match) out.push_back(c.channel);
  return out;
}

EquivalenceReport check_equivalence(const MbqcGrid& baseline, const MbqcGrid& compiled) {
  EquivalenceReport rep;
  const int n = static_cast<int>(std::max(baseline.channels.size(), compiled.channels.size()));
  for (int ch = 0; ch < n; ++ch) {
    ChannelComparison c;
    c.channel = ch;
    if (ch < static_cast<int>(baseline.channels.size())) c.baseline = channel_sequence(baseline, ch);
    if (ch < static_cast<int>(compiled.channels.size())) c.compiled = channel_sequence(compiled, ch);
    c.match = ch < static_cast<int>(baseline.channels.size()) && ch < static_cast<int>(compiled.channels.size()) &&
              c.baseline == c.compiled;
    rep.channels.push_back(std::move(c));
  }
  for (int ch = 0; ch < static_cast<int>(compiled.channels.size()); ++ch) {
    const auto& cells = compiled.channels[ch];
    for (std::size_t i = 1; i < cells.size(); ++i)
      if (cells[i].col < cells[i - 1].col)
        rep.order_violations.push_back("channel " + std::to_string(ch) + " steps back to column " +
                                       std::to_string(cells[i].col) + " at row " + std::to_string(cells[i].row));
  }
  rep.overall = rep.order_violations.empty() && rep.mismatched().empty();
  return rep;
}

}  // namespace mbqc
