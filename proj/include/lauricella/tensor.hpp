/*
   Copyright 2026 The lauricella authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAURICELLA_TENSOR_HPP
#define LAURICELLA_TENSOR_HPP

#include <array>
#include <map>
#include <set>
#include <utility>

#include "lauricella/jet.hpp"

namespace lauricella {

/// Sparse (1,2)-tensor symmetric in the lower index pair: (upper, lo1, lo2)
/// with lo1 <= lo2 stored canonically. Absent entries are exact zeros.
template <class S>
class Tensor3 {
  public:
    using Key = std::array<int, 3>; // {upper, lo1, lo2}

    Tensor3() = default;
    explicit Tensor3(int n) : n_(n) {}

    int dim() const { return n_; }

    void set(int k, int i, int j, S v) {
        if (i > j) std::swap(i, j);
        if (ScalarOps<S>::is_zero(v))
            m_.erase(Key{k, i, j});
        else
            m_[Key{k, i, j}] = std::move(v);
    }
    void add(int k, int i, int j, const S& v) {
        if (i > j) std::swap(i, j);
        auto it = m_.find(Key{k, i, j});
        if (it == m_.end()) {
            if (!ScalarOps<S>::is_zero(v)) m_[Key{k, i, j}] = v;
        } else {
            it->second += v;
            if (ScalarOps<S>::is_zero(it->second)) m_.erase(it);
        }
    }

    S get(int k, int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = m_.find(Key{k, i, j});
        return it == m_.end() ? ScalarOps<S>::zero(n_) : it->second;
    }
    bool has(int k, int i, int j) const {
        if (i > j) std::swap(i, j);
        return m_.count(Key{k, i, j}) != 0;
    }

    const std::map<Key, S>& entries() const { return m_; }

    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

    /// Union of keys of two tensors, for entrywise comparisons.
    static std::set<Key> key_union(const Tensor3& a, const Tensor3& b) {
        std::set<Key> keys;
        for (const auto& [k, v] : a.m_) keys.insert(k);
        for (const auto& [k, v] : b.m_) keys.insert(k);
        return keys;
    }

  private:
    int n_ = 0;
    std::map<Key, S> m_;
};

} // namespace lauricella

#endif
