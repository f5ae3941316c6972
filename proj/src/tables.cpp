#include "ppturbo/tables.hpp"

#include <stdexcept>

namespace ppturbo {

namespace {

// AWGN, largest spread, TUB(BER) minimized.
const std::vector<GoldenRow> kTable2 = {
    {40, 5, 9, 0, "13x+10x^2", 4, 0.9336, 0.1918, 4, "3x+8x^2+16x^3", 4, 0.3970, 0.0432, 4},
    {48, 5, 9, 0, "7x+36x^2", 6, 0.1749, 0.0264, 2, "5x+6x^2+12x^3", 6, 0.0808, 0.0156, 24},
    {56, 5, 9, 0, "3x+42x^2", 6, 0.7177, 0.2062, 4, "5x+14x^2+42x^3", 6, 0.6923, 0.1822, 8},
    {64, 5, 9, 0, "7x+16x^2", 8, 0.2298, 0.0739, 4, "5x+24x^2+48x^3", 8, 0.0183, 0.0062, 8},
    {72, 4.5, 9, 0, "5x+60x^2", 8, 1.3881, 0.4780, 4, "7x+4x^3", 8, 0.0598, 0.0169, 12},
    {80, 4.5, 9, 0, "11x+20x^2", 10, 0.0131, 0.0034, 4, "11x+20x^2", 10, 0.0131, 0.0034, 8},
    {88, 4, 9, 0, "5x+22x^2", 8, 0.3257, 0.1557, 4, "27x+22x^2+66x^3", 8, 0.2544, 0.1122, 8},
    {96, 4, 9, 0, "13x+72x^2", 12, 0.1441, 0.0612, 4, "9x+12x^2+56x^3", 12, 0.1014, 0.0612, 24},
    {104, 3.75, 9, 0, "7x+78x^2", 8, 0.1727, 0.0959, 4, "37x+78x^3", 8, 0.1562, 0.0600, 8},
    {112, 3.5, 9, 0, "41x+28x^2", 14, 0.4836, 0.2701, 4, "41x+28x^3", 14, 0.3701, 0.2172, 8},
    {120, 3.5, 7, 0, "17x+90x^2", 10, 0.3141, 0.1568, 4, "5x+48x^3", 12, 0.0832, 0.0390, 12},
    {128, 3.5, 7, 0, "17x+32x^2", 16, 0.0704, 0.0463, 4, "17x+32x^2", 16, 0.0704, 0.0463, 8},
    {136, 3.5, 7, 0, "19x+102x^2", 10, 0.2875, 0.1703, 4, "19x+34x^3", 10, 0.2246, 0.1329, 8},
    {144, 3.25, 7, 0, "19x+36x^2", 16, 0.0472, 0.0318, 4, "19x+36x^2", 16, 0.0472, 0.0318, 24},
    {152, 3.25, 7, 0, "59x+38x^2", 12, 0.4973, 0.3280, 4, "59x+114x^3", 12, 0.4103, 0.2711, 8},
    {160, 3.25, 7, 0, "19x+120x^2", 16, 0.0521, 0.0498, 4, "19x+40x^2+40x^3", 16, 0.0469, 0.0385, 8},
    {168, 3, 7, 0, "61x+126x^2", 12, 0.7835, 0.6563, 4, "3x+42x^2+154x^3", 12, 0.4852, 0.3567, 24},
    {176, 3, 7, 0, "65x+44x^2", 16, 0.0963, 0.0931, 4, "21x+132x^3", 16, 0.0953, 0.0861, 4},
    {184, 3, 7, 0, "25x+46x^2", 14, 0.0545, 0.0479, 4, "25x+46x^2", 14, 0.0545, 0.0479, 8},
    {192, 3, 7, 0, "23x+144x^2", 16, 0.0265, 0.0247, 4, "7x+48x^2+64x^3", 16, 0.0265, 0.0247, 24},
    {200, 3, 7, 0, "13x+150x^2", 14, 0.0709, 0.0568, 4, "41x+40x^2+180x^3", 20, 0.0769, 0.0808, 8},
    {208, 2.75, 7, 0, "27x+52x^2", 16, 0.0528, 0.0838, 4, "85x+26x^2+52x^3", 16, 0.0343, 0.0292, 8},
    {216, 2.75, 7, 0, "23x+144x^2", 18, 0.0322, 0.0359, 4, "11x+36x^2+144x^3", 18, 0.0322, 0.0359, 24},
    {224, 2.75, 7, 0, "27x+168x^2", 16, 0.8377, 0.9411, 4, "27x+56x^2+112x^3", 16, 0.8377, 0.9411, 8},
    {232, 2.75, 7, 0, "85x+58x^2", 16, 0.0082, 0.0105, 4, "85x+58x^2", 16, 0.0082, 0.0105, 8},
    {240, 2.75, 7, 0, "91x+60x^2", 16, 0.0326, 0.0704, 4, "29x+30x^2+20x^3", 18, 0.0279, 0.0371, 24},
    {248, 2.75, 7, 0, "33x+186x^2", 18, 0.0119, 0.0142, 4, "33x+62x^2+124x^3", 18, 0.0119, 0.0142, 8},
    {256, 2.5, 7, 0, "31x+64x^2", 16, 0.0144, 0.0139, 4, "19x+96x^2+192x^3", 18, 0.3217, 0.4015, 8},
    {264, 2.5, 7, 0, "17x+66x^2", 18, 0.0387, 0.0521, 4, "17x+66x^2", 18, 0.0387, 0.0521, 24},
    {272, 2.5, 7, 0, "101x+204x^2", 16, 0.0059, 0.0069, 2, "101x+204x^2", 16, 0.0059, 0.0069, 4},
    {280, 2.5, 7, 0, "17x+210x^2", 20, 1.8347, 2.5452, 4, "17x+210x^2", 20, 1.8347, 2.5452, 8},
    {288, 2.5, 7, 0, "55x+72x^2", 18, 0.0216, 0.0198, 4, "55x+72x^2", 18, 0.0216, 0.0198, 24},
    {296, 2.5, 5, 0, "109x+74x^2", 20, 0.0150, 0.0266, 4, "109x+74x^2", 20, 0.0150, 0.0266, 8},
    {304, 2.5, 5, 0, "113x+76x^2", 16, 0.0031, 0.0027, 4, "47x+38x^2+76x^3", 18, 0.1371, 0.2009, 8},
    {312, 2.5, 5, 0, "19x+78x^2", 22, 0.0244, 0.0415, 4, "19x+78x^2", 22, 0.0244, 0.0415, 24},
    {320, 2.25, 5, 0, "21x+80x^2", 20, 0.0111, 0.0152, 4, "21x+80x^2", 20, 0.0111, 0.0152, 8},
    {328, 2.25, 5, 0, "39x+246x^2", 22, 0.0084, 0.0131, 4, "39x+246x^2", 22, 0.0084, 0.0131, 8},
    {336, 2.25, 5, 0, "125x+252x^2", 16, 0.0425, 0.0661, 2, "31x+126x^2+28x^3", 18, 0.0404, 0.0714, 24},
    {344, 2.25, 5, 0, "21x+258x^2", 24, 0.0084, 0.0165, 4, "21x+258x^2", 24, 0.0084, 0.0165, 8},
    {352, 2.25, 5, 0, "153x+264x^2", 22, 0.0104, 0.0132, 2, "153x+264x^2", 22, 0.0104, 0.0132, 4},
};

// AWGN, cubic search with the quadratic searches' best D imposed as floor.
const std::vector<GoldenRow> kTable3 = {
    {120, 3.5, 7, 10, "17x+90x^2", 10, 0.3141, 0.1568, 4, "5x+48x^3", 12, 0.0832, 0.0390, 12},
    {200, 3, 7, 14, "13x+150x^2", 14, 0.0709, 0.0568, 4, "3x+80x^3", 14, 0.0459, 0.0434, 8},
    {240, 2.75, 7, 16, "91x+60x^2", 16, 0.0326, 0.0704, 4, "29x+30x^2+20x^3", 18, 0.0279, 0.0371, 24},
    {256, 2.5, 7, 16, "31x+64x^2", 16, 0.0144, 0.0139, 4, "31x+64x^2", 16, 0.0144, 0.0139, 8},
    {304, 2.5, 5, 16, "113x+76x^2", 16, 0.0031, 0.0027, 4, "113x+76x^2", 16, 0.0031, 0.0027, 8},
    {336, 2.25, 5, 16, "125x+252x^2", 16, 0.0425, 0.0661, 2, "31x+126x^2+28x^3", 18, 0.0404, 0.0714, 24},
};

// Rayleigh, largest spread, TUB(FER) minimized.
const std::vector<GoldenRow> kTable4 = {
    {40, 7.5, 9, 0, "13x+30x^2", 4, 4.0451, 0.6539, 4, "3x+8x^2+16x^3", 4, 1.5681, 0.1706, 4},
    {48, 7.5, 9, 0, "7x+36x^2", 6, 0.7589, 0.1150, 2, "5x+6x^2+12x^3", 6, 0.3504, 0.0676, 24},
    {56, 7.5, 9, 0, "3x+42x^2", 6, 3.3169, 0.9523, 4, "5x+14x^2+42x^3", 6, 3.2002, 0.8424, 8},
    {64, 7.5, 9, 0, "9x+48x^2", 8, 1.1002, 0.3456, 4, "7x+22x^2+60x^3", 8, 0.1217, 0.0233, 8},
    {72, 7.5, 9, 0, "5x+60x^2", 8, 1.6174, 0.5677, 4, "7x+4x^3", 8, 0.0399, 0.0121, 12},
    {80, 6.5, 9, 0, "11x+20x^2", 10, 0.1369, 0.0344, 4, "11x+20x^2", 10, 0.1369, 0.0344, 8},
    {88, 6.5, 9, 0, "5x+22x^2", 8, 0.5231, 0.2584, 4, "27x+22x^2+66x^3", 8, 0.3775, 0.1798, 8},
    {96, 6.5, 9, 0, "13x+72x^2", 12, 0.2173, 0.0942, 4, "5x+8x^3", 12, 0.1705, 0.0771, 24},
    {104, 6, 9, 0, "37x+26x^2", 8, 0.4179, 0.2028, 4, "37x+78x^3", 8, 0.3063, 0.1203, 8},
    {112, 6, 9, 0, "41x+28x^2", 14, 0.3613, 0.2200, 4, "41x+28x^3", 14, 0.2812, 0.1825, 8},
    {120, 6, 7, 0, "17x+90x^2", 10, 0.3045, 0.1609, 4, "5x+48x^3", 12, 0.0632, 0.0302, 12},
    {128, 5.5, 7, 0, "17x+32x^2", 16, 0.2189, 0.1446, 4, "17x+32x^2", 16, 0.2189, 0.1446, 8},
    {136, 5.5, 7, 0, "19x+102x^2", 10, 0.9306, 0.5515, 4, "19x+34x^3", 10, 0.7229, 0.4296, 8},
    {144, 5, 7, 0, "19x+36x^2", 16, 0.2131, 0.1431, 4, "19x+36x^2", 16, 0.2131, 0.1431, 24},
    {152, 5, 7, 0, "59x+38x^2", 12, 2.2269, 1.4680, 4, "59x+114x^3", 12, 1.8411, 1.2146, 8},
    {160, 5, 7, 0, "19x+120x^2", 16, 0.2383, 0.2274, 4, "19x+40x^2+40x^3", 16, 0.2148, 0.1761, 8},
    {168, 5, 7, 0, "61x+126x^2", 12, 1.4998, 1.2596, 4, "3x+42x^2+154x^3", 12, 0.8970, 0.6758, 24},
    {176, 5, 7, 0, "21x+44x^2", 16, 0.2018, 0.1691, 2, "21x+44x^2", 16, 0.2018, 0.1691, 4},
    {184, 5, 7, 0, "25x+46x^2", 14, 0.1083, 0.0959, 4, "35x+46x^2+138x^3", 14, 0.1760, 0.0909, 4},
    {192, 4.5, 7, 0, "23x+144x^2", 16, 0.1878, 0.1735, 4, "23x+144x^2", 16, 0.1878, 0.1735, 24},
    {200, 4.5, 7, 0, "13x+150x^2", 14, 0.4798, 0.3839, 4, "41x+40x^2+180x^3", 20, 0.5130, 0.5381, 8},
    {208, 4.5, 7, 0, "25x+52x^2", 16, 0.1889, 0.1546, 4, "85x+26x^2+52x^3", 16, 0.0983, 0.0841, 8},
    {216, 4.5, 7, 0, "23x+144x^2", 18, 0.0925, 0.1038, 4, "23x+144x^2", 18, 0.0925, 0.1038, 24},
    {224, 4.5, 7, 0, "27x+168x^2", 16, 2.5039, 2.8129, 4, "27x+168x^2", 16, 2.5039, 2.8129, 8},
    {232, 4.5, 7, 0, "15x+174x^2", 16, 0.0252, 0.0295, 4, "15x+174x^2", 16, 0.0252, 0.0295, 8},
    {240, 4.5, 7, 0, "89x+60x^2", 16, 0.0897, 0.0807, 4, "11x+90x^2+60x^3", 18, 0.1245, 0.0794, 12},
    {248, 4.5, 7, 0, "33x+186x^2", 18, 0.0336, 0.0406, 4, "33x+186x^2", 18, 0.0336, 0.0406, 8},
    {256, 4.5, 7, 0, "31x+192x^2", 16, 0.0131, 0.0122, 4, "19x+32x^2+64x^3", 18, 0.4588, 0.5702, 8},
    {264, 4, 7, 0, "31x+66x^2", 18, 0.1758, 0.1813, 4, "31x+66x^2", 18, 0.1758, 0.1813, 24},
    {272, 4, 7, 0, "101x+204x^2", 16, 0.0265, 0.0310, 2, "101x+204x^2", 16, 0.0265, 0.0310, 4},
    {280, 4, 7, 0, "17x+210x^2", 20, 8.2333, 11.4211, 4, "17x+210x^2", 20, 8.2333, 11.4211, 8},
    {288, 4, 7, 0, "55x+72x^2", 18, 0.0977, 0.0895, 4, "55x+72x^2", 18, 0.0977, 0.0895, 24},
    {296, 4, 5, 0, "109x+222x^2", 20, 0.0861, 0.1186, 4, "109x+222x^2", 20, 0.0861, 0.1186, 8},
    {304, 4, 5, 0, "113x+76x^2", 16, 0.0141, 0.0122, 4, "47x+38x^2+76x^3", 18, 0.6171, 0.9044, 8},
    {312, 4, 5, 0, "19x+78x^2", 22, 0.1109, 0.1883, 4, "19x+78x^2", 22, 0.1109, 0.1883, 24},
    {320, 4, 5, 0, "21x+80x^2", 20, 0.0209, 0.0283, 4, "21x+80x^2", 20, 0.0209, 0.0283, 8},
    {328, 4, 5, 0, "39x+246x^2", 22, 0.0150, 0.0236, 4, "39x+246x^2", 22, 0.0150, 0.0236, 8},
    {336, 3.5, 5, 0, "125x+252x^2", 16, 0.3215, 0.5000, 2, "31x+126x^2+28x^3", 18, 0.3042, 0.5351, 24},
    {344, 3.5, 5, 0, "21x+258x^2", 24, 0.0605, 0.1181, 4, "21x+258x^2", 24, 0.0605, 0.1181, 8},
    {352, 3.5, 5, 0, "153x+264x^2", 22, 0.0291, 0.0381, 2, "153x+264x^2", 22, 0.0291, 0.0381, 4},
};

// Rayleigh, D floor imposed.
const std::vector<GoldenRow> kTable5 = {
    {120, 6, 7, 10, "17x+90x^2", 10, 0.3045, 0.1609, 4, "5x+48x^3", 12, 0.0632, 0.0302, 12},
    {200, 4.5, 7, 14, "13x+150x^2", 14, 0.4798, 0.3839, 4, "3x+80x^3", 14, 0.3141, 0.2943, 8},
    {240, 4.5, 7, 16, "89x+60x^2", 16, 0.0897, 0.0807, 4, "11x+90x^2+60x^3", 18, 0.1245, 0.0794, 12},
    {256, 4.5, 7, 16, "31x+192x^2", 16, 0.0131, 0.0122, 4, "31x+192x^2", 16, 0.0131, 0.0122, 8},
    {304, 4, 5, 16, "113x+76x^2", 16, 0.0141, 0.0122, 4, "113x+76x^2", 16, 0.0141, 0.0122, 8},
    {336, 3.5, 5, 16, "125x+252x^2", 16, 0.3215, 0.5000, 2, "125x+252x^2", 16, 0.3215, 0.5000, 12},
};

}  // namespace

const std::vector<GoldenRow>& golden_table(int id) {
    switch (id) {
        case 2: return kTable2;
        case 3: return kTable3;
        case 4: return kTable4;
        case 5: return kTable5;
        default: throw std::invalid_argument("golden_table: id must be 2..5");
    }
}

std::optional<GoldenRow> golden_row(int table, std::uint64_t L) {
    for (const GoldenRow& row : golden_table(table))
        if (row.L == L) return row;
    return std::nullopt;
}

std::optional<double> preset_snr_db(int table, std::uint64_t L) {
    if (auto row = golden_row(table, L)) return row->snr_db;
    return std::nullopt;
}

}  // namespace ppturbo
