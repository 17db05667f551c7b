#include "gaaf/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace gaaf {

namespace {

std::string blade_name(BladeBits b) {
    if (b == 0) return "1";
    std::string name = "γ";
    for (int k = 0; k < kMaxDim; ++k)
        if (b & (1u << k)) name += static_cast<char>('1' + k);
    return name;
}

// Codepoint count; γ is two bytes but one column.
std::size_t visual_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

}  // namespace

std::vector<DisplayBlade> display_basis(const Signature& sig) {
    const int n = sig.n();
    if (n == 3) {
        return {{0b000, 1.0, "1"},   {0b001, 1.0, "γ1"},  {0b010, 1.0, "γ2"},
                {0b100, 1.0, "γ3"},  {0b011, 1.0, "γ12"}, {0b110, 1.0, "γ23"},
                {0b101, -1.0, "γ31"}, {0b111, 1.0, "I"}};
    }
    std::vector<DisplayBlade> basis;
    for (BladeBits b = 0; b < static_cast<BladeBits>(sig.algebra_dim()); ++b)
        basis.push_back({b, 1.0, blade_name(b)});
    std::stable_sort(basis.begin(), basis.end(), [](const DisplayBlade& a, const DisplayBlade& b) {
        return std::make_pair(grade(a.blade), a.blade) < std::make_pair(grade(b.blade), b.blade);
    });
    return basis;
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string render(const Multivector& a) {
    std::string out;
    for (const DisplayBlade& d : display_basis(a.signature())) {
        const double c = d.sign * a[d.blade];
        if (c == 0.0) continue;
        if (out.empty()) {
            if (std::signbit(c)) out += "-";
        } else {
            out += std::signbit(c) ? " - " : " + ";
        }
        out += format_double(std::abs(c));
        if (d.blade != 0) out += d.name;
    }
    return out.empty() ? "0" : out;
}

std::string render_cayley_table(int n) {
    if (n < 1 || n > kMaxDim) throw Error("table dimension must be in [1, 6]");
    const Signature sig = euclidean(n);
    const auto basis = display_basis(sig);
    const int dim = sig.algebra_dim();

    // Display sign of each canonical blade, for re-expressing products.
    std::vector<double> sign_of(dim, 1.0);
    std::vector<std::string> name_of(dim);
    for (const DisplayBlade& d : basis) {
        sign_of[d.blade] = d.sign;
        name_of[d.blade] = d.name;
    }

    std::vector<std::vector<std::string>> cells(dim + 1, std::vector<std::string>(dim + 1));
    cells[0][0] = "*";
    for (int i = 0; i < dim; ++i) {
        cells[0][i + 1] = basis[i].name;
        cells[i + 1][0] = basis[i].name;
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto prod = blade_product(basis[i].blade, basis[j].blade, sig);
            const BladeBits c = prod.blade;
            const double coeff = basis[i].sign * basis[j].sign * prod.sign * sign_of[c];
            cells[i + 1][j + 1] = (coeff < 0 ? "-" : "") + name_of[c];
        }
    }

    std::size_t width = 0;
    for (const auto& row : cells)
        for (const auto& cell : row) width = std::max(width, visual_width(cell));

    std::string out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out += row[j];
            if (j + 1 < row.size())
                out.append(width + 1 - visual_width(row[j]), ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace gaaf
