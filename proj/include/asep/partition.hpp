#ifndef ASEP_PARTITION_HPP
#define ASEP_PARTITION_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace asep {

/*
 * Integer partition with explicit length: trailing zeros are significant
 * data here (the shapes (m) and (m,0) index different determinants).
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    // (m, 0^r): one part m followed by r zeros; length r+1.
    static Partition hook_shape(int m, int r) {
        std::vector<int> parts(r + 1, 0);
        parts[0] = m;
        return Partition(std::move(parts));
    }

    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    int weight() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool all_zero() const {
        for (int p : parts_)
            if (p != 0) return false;
        return true;
    }

    // Number of positive parts.
    int positive_length() const {
        int m = 0;
        while (m < length() && parts_[m] > 0) ++m;
        return m;
    }

    // Hook length of cell (row i, col j), both 0-indexed: arm + leg + 1.
    int hook_length(int i, int j) const {
        int arm = parts_[i] - (j + 1);
        int leg = 0;
        for (int k = i + 1; k < length(); ++k)
            if (parts_[k] >= j + 1) ++leg;
        return arm + leg + 1;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// All partitions fitting in a rows x cols box (every length 0..rows,
// trailing zeros preserved per length).
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining_rows, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (remaining_rows == 0) return;
        for (int p = maxpart; p >= 0; --p) {
            cur.push_back(p);
            self(self, remaining_rows - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, rows, cols);
    return out;
}

} // namespace asep

#endif // ASEP_PARTITION_HPP
