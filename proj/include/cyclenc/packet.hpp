#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cyclenc {

// XOR of source messages M_i, i in support. Support is kept sorted and unique.
class CodedPacket {
public:
    CodedPacket() = default;
    CodedPacket(std::initializer_list<int> idx);
    explicit CodedPacket(std::vector<int> idx);

    static CodedPacket unit(int i) { return CodedPacket({i}); }

    const std::vector<int>& support() const noexcept { return support_; }
    bool is_zero() const noexcept { return support_.empty(); }
    bool contains(int i) const;
    int max_index() const noexcept { return support_.empty() ? -1 : support_.back(); }
    std::string str() const;  // "[0,2]"

    friend bool operator==(const CodedPacket&, const CodedPacket&) = default;
    friend auto operator<=>(const CodedPacket&, const CodedPacket&) = default;

private:
    std::vector<int> support_;
};

CodedPacket packet_xor(const CodedPacket& p, const CodedPacket& q);

// GF(2) span over message coordinates 0..width-1, kept in reduced row-echelon form.
class KnowledgeBase {
public:
    explicit KnowledgeBase(int width = 0);

    int width() const noexcept { return width_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }

    // Returns true if the span grew. Throws std::invalid_argument for the zero packet
    // or indices outside [0, width).
    bool insert(const CodedPacket& p);

    // Throws std::out_of_range for i outside [0, width).
    bool can_decode(int i) const;
    bool derivable(const CodedPacket& p) const;
    std::vector<int> decodable() const;
    std::vector<CodedPacket> basis() const;

private:
    using Bits = std::vector<std::uint64_t>;
    struct Row {
        int pivot;
        Bits bits;
    };

    Bits to_bits(const CodedPacket& p) const;
    bool reduce(Bits& v) const;  // returns true if v ends nonzero
    static bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }

    int width_;
    int words_;
    std::vector<Row> rows_;  // sorted by pivot
};

// Convenience: knowledge_insert as a value operation.
KnowledgeBase knowledge_insert(KnowledgeBase kb, const CodedPacket& p);

}  // namespace cyclenc
