#include "cyclenc/packet.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

namespace cyclenc {

CodedPacket::CodedPacket(std::initializer_list<int> idx) : CodedPacket(std::vector<int>(idx)) {}

CodedPacket::CodedPacket(std::vector<int> idx) : support_(std::move(idx)) {
    std::sort(support_.begin(), support_.end());
    // duplicates cancel pairwise over GF(2)
    std::vector<int> out;
    for (std::size_t i = 0; i < support_.size();) {
        std::size_t j = i;
        while (j < support_.size() && support_[j] == support_[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(support_[i]);
        i = j;
    }
    support_ = std::move(out);
}

bool CodedPacket::contains(int i) const { return std::binary_search(support_.begin(), support_.end(), i); }

std::string CodedPacket::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(support_[i]);
    }
    return s + "]";
}

CodedPacket packet_xor(const CodedPacket& p, const CodedPacket& q) {
    std::vector<int> out;
    std::set_symmetric_difference(p.support().begin(), p.support().end(), q.support().begin(),
                                  q.support().end(), std::back_inserter(out));
    return CodedPacket(std::move(out));
}

KnowledgeBase::KnowledgeBase(int width) : width_(width), words_((width + 63) / 64) {
    if (width < 0) throw std::invalid_argument("negative knowledge width");
}

KnowledgeBase::Bits KnowledgeBase::to_bits(const CodedPacket& p) const {
    Bits b(words_, 0);
    for (int i : p.support()) {
        if (i < 0 || i >= width_) throw std::invalid_argument("packet index " + std::to_string(i) + " out of range");
        b[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return b;
}

bool KnowledgeBase::reduce(Bits& v) const {
    for (const Row& r : rows_) {
        if (test(v, r.pivot)) {
            for (int w = 0; w < words_; ++w) v[w] ^= r.bits[w];
        }
    }
    return std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
}

bool KnowledgeBase::insert(const CodedPacket& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot insert the zero packet");
    Bits v = to_bits(p);
    if (!reduce(v)) return false;
    int pivot = 0;
    for (int w = 0; w < words_; ++w) {
        if (v[w]) {
            pivot = w * 64 + std::countr_zero(v[w]);
            break;
        }
    }
    for (Row& r : rows_) {
        if (test(r.bits, pivot)) {
            for (int w = 0; w < words_; ++w) r.bits[w] ^= v[w];
        }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, int piv) { return r.pivot < piv; });
    rows_.insert(pos, Row{pivot, std::move(v)});
    return true;
}

bool KnowledgeBase::can_decode(int i) const {
    if (i < 0 || i >= width_) throw std::out_of_range("message index " + std::to_string(i) + " out of range");
    // In RREF, e_i is in the span iff the row with pivot i is exactly e_i.
    auto it = std::lower_bound(rows_.begin(), rows_.end(), i, [](const Row& r, int piv) { return r.pivot < piv; });
    if (it == rows_.end() || it->pivot != i) return false;
    for (int w = 0; w < words_; ++w) {
        const std::uint64_t expect = (w == (i >> 6)) ? (std::uint64_t{1} << (i & 63)) : 0;
        if (it->bits[w] != expect) return false;
    }
    return true;
}

bool KnowledgeBase::derivable(const CodedPacket& p) const {
    if (p.is_zero()) return true;
    if (p.max_index() >= width_ || p.support().front() < 0) return false;
    Bits v = to_bits(p);
    return !reduce(v);
}

std::vector<int> KnowledgeBase::decodable() const {
    std::vector<int> out;
    for (const Row& r : rows_) {
        if (can_decode(r.pivot)) out.push_back(r.pivot);
    }
    return out;
}

std::vector<CodedPacket> KnowledgeBase::basis() const {
    std::vector<CodedPacket> out;
    for (const Row& r : rows_) {
        std::vector<int> idx;
        for (int i = 0; i < width_; ++i) {
            if (test(r.bits, i)) idx.push_back(i);
        }
        out.emplace_back(std::move(idx));
    }
    return out;
}

KnowledgeBase knowledge_insert(KnowledgeBase kb, const CodedPacket& p) {
    kb.insert(p);
    return kb;
}

}  // namespace cyclenc
