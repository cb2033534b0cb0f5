#include "blab/tensor.hpp"

namespace blab {

const WeightBlocks& WeightBlocks::get(int m, int n) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, std::unique_ptr<WeightBlocks>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto wb = std::make_unique<WeightBlocks>();
  wb->m = m;
  wb->n = n;
  std::map<Weight, std::vector<Code>> grouped;
  for (Code c : all_codes(m, n)) grouped[weight_of(m, c, n)].push_back(c);
  for (auto& [w, cs] : grouped) {
    wb->index.emplace(w, static_cast<int>(wb->weights.size()));
    wb->weights.push_back(w);
    wb->pos.emplace_back();
    auto& posmap = wb->pos.back();
    for (size_t i = 0; i < cs.size(); ++i) posmap.emplace(cs[i], static_cast<int>(i));
    wb->codes.push_back(std::move(cs));
  }
  it = cache.emplace(key, std::move(wb)).first;
  return *it->second;
}

}  // namespace blab
