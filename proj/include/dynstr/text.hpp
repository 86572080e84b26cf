#ifndef DYNSTR_TEXT_HPP
#define DYNSTR_TEXT_HPP

#include "dynstr/common.hpp"

namespace dynstr {

// A frozen text made of several constituent strings, each followed by a
// distinct sentinel that sorts below every alphabet character. Raw bytes are
// shifted up so that values 1..kCharShift-1 stay reserved for sentinels and
// other sub-alphabet markers.
class PartedText {
public:
    static constexpr i32 kCharShift = 8;

    struct Part {
        i32 offset = 0; // part text occupies chars[offset+1 .. offset+len]
        i32 len = 0;
    };

    PartedText() = default;

    explicit PartedText(const std::vector<std::string>& strings) {
        chars_.push_back(0); // 1-based
        parts_.reserve(strings.size());
        i32 sentinel = 1;
        for (const auto& s : strings) {
            Part p;
            p.offset = static_cast<i32>(chars_.size()) - 1;
            p.len = static_cast<i32>(s.size());
            parts_.push_back(p);
            for (unsigned char c : s) chars_.push_back(static_cast<i32>(c) + kCharShift);
            chars_.push_back(sentinel++);
        }
        require(sentinel <= kCharShift, "too many parts for reserved sentinel range");
        i64 total = 0;
        for (const auto& p : parts_) total += p.len;
        require(total >= 1, "empty total input");
    }

    // Same, but from pre-mapped character values (used when a part carries a
    // sub-alphabet marker such as the Lyndon '$').
    static PartedText from_mapped(const std::vector<std::vector<i32>>& strings) {
        PartedText t;
        t.chars_.push_back(0);
        i32 sentinel = 1;
        for (const auto& s : strings) {
            Part p;
            p.offset = static_cast<i32>(t.chars_.size()) - 1;
            p.len = static_cast<i32>(s.size());
            t.parts_.push_back(p);
            for (i32 c : s) t.chars_.push_back(c);
            t.chars_.push_back(sentinel++);
        }
        require(sentinel <= kCharShift, "too many parts for reserved sentinel range");
        return t;
    }

    i32 size() const { return static_cast<i32>(chars_.size()) - 1; }
    i32 at(i32 pos) const { return chars_[pos]; }
    const std::vector<i32>& raw() const { return chars_; }

    i32 part_count() const { return static_cast<i32>(parts_.size()); }
    i32 part_len(i32 part) const { return parts_[part].len; }

    // 1-based local position within a part -> global position
    i32 global(i32 part, i32 local) const { return parts_[part].offset + local; }

    // global position -> part index, or -1 if it is a sentinel slot
    i32 part_of(i32 pos) const {
        for (i32 p = 0; p < part_count(); ++p) {
            if (pos > parts_[p].offset && pos <= parts_[p].offset + parts_[p].len) return p;
        }
        return -1;
    }

    i32 local(i32 part, i32 global_pos) const { return global_pos - parts_[part].offset; }

    bool is_sentinel(i32 pos) const { return chars_[pos] < kCharShift; }

private:
    std::vector<i32> chars_{};
    std::vector<Part> parts_{};
};

// A substring of the frozen text: global start position plus length.
// Must not straddle a sentinel when used as a string value.
struct Ref {
    i32 pos = 1;
    i32 len = 0;

    bool empty() const { return len == 0; }
    Ref drop(i32 k) const { return Ref{pos + k, len - k}; }  // drop first k chars
    Ref take(i32 k) const { return Ref{pos, k}; }
};

} // namespace dynstr

#endif
