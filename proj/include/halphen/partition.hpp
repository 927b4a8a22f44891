/*
   Copyright 2026 The Halphen Library Authors

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

#ifndef HALPHEN_PARTITION_HPP
#define HALPHEN_PARTITION_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace halphen {

// Non-increasing tuple of non-negative integers indexing the Pluecker
// coordinates U_lambda. Stored without trailing zeros; padding to length
// n+1 happens where a partition meets an arc.
class Partition {
   public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0) throw Error("BAD_PARTITION", "negative part");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw Error("BAD_PARTITION", "parts must be non-increasing");
        }
    }

    int length() const { return static_cast<int>(parts_.size()); }

    // Part k, zero-padded beyond the stored length.
    int part(int k) const {
        return (k >= 0 && k < length()) ? parts_[static_cast<std::size_t>(k)] : 0;
    }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }

    // Hook (k, 1, ..., 1) of length i; hook(i, 1) = (1^i).
    static Partition hook(int i, int k) {
        if (i < 1 || k < 1) throw Error("BAD_PARTITION", "hook needs i, k >= 1");
        std::vector<int> p(static_cast<std::size_t>(i), 1);
        p[0] = k;
        return Partition(std::move(p));
    }

    // Token form used by the expression grammar: "U", "U_1", "U_21", ...
    std::string token() const {
        if (parts_.empty()) return "U";
        std::string s = "U_";
        for (int p : parts_) {
            if (p > 9) throw Error("BAD_PARTITION", "token form only covers single-digit parts");
            s += static_cast<char>('0' + p);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

   private:
    std::vector<int> parts_;
};

}  // namespace halphen

#endif
