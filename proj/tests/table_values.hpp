#pragma once

#include <array>

namespace tables {

struct Row {
  const char* table;
  const char* instance;
  double solution;
  double shor;
  double sublevel;
  double ri;
  double rg;
};

// (RI, RG) as printed, with the Shor and deepest sublevel bounds of the same row
inline constexpr std::array<Row, 154> rows{{
    {"maxcut", "g05_60", 536, 550.1, 544.6, 39, 1.6},
    {"maxcut", "g05_80", 929, 950.9, 944.6, 28.8, 1.7},
    {"maxcut", "g05_100", 1430, 1463.5, 1456.8, 20, 1.9},
    {"maxcut", "pm1d_80", 227, 270, 258.8, 26, 14},
    {"maxcut", "pm1d_100", 340, 405.4, 393.7, 19, 15.8},
    {"maxcut", "pm1s_80", 79, 90.3, 82.8, 66.4, 4.8},
    {"maxcut", "pm1s_100", 127, 143.2, 135.3, 48.8, 6.5},
    {"maxcut", "pw01_100", 2019, 2125.4, 2075, 47.4, 2.8},
    {"maxcut", "pw05_100", 8190, 8427.7, 8388.1, 16.7, 2.4},
    {"maxcut", "pw09_100", 13585, 13806, 13766.5, 17.9, 1.3},
    {"maxcut", "w01_100", 651, 740.9, 696.2, 49.7, 6.9},
    {"maxcut", "w05_100", 1646, 1918, 1869.7, 17.8, 13.6},
    {"maxcut", "w09_100", 2121, 2500.3, 2422.8, 20.4, 14.2},
    {"maxcut", "g_20", 537.4, 570.8, 513.4, 171.9, -4.5},
    {"maxcut", "g_40", 992.2, 1032.6, 927.6, 260, -6.5},
    {"maxcut", "g_60", 1387.2, 1439.9, 1281.9, 300.4, -7.6},
    {"maxcut", "g_80", 1838.1, 1899.2, 1698.8, 328, -7.6},
    {"maxcut", "g_100", 2328.3, 2398.7, 2149.3, 354.3, -7.7},
    {"maxcut", "g_120", 2655.4, 2731.7, 2439.8, 382.6, -8.1},
    {"maxcut", "g_140", 3027.2, 3115.8, 2782.6, 376.1, -8.1},
    {"maxcut", "g_160", 3589, 3670.7, 3310.9, 440.4, -7.7},
    {"maxcut", "g_180", 3953.1, 4054.7, 3653.5, 394.9, -7.6},
    {"maxcut", "g_200", 4472.3, 4584.6, 4132.2, 402.8, -7.6},
    {"maxcut", "G11", 564, 629.2, 564.6, 99.1, 0.1},
    {"maxcut", "G12", 556, 623.9, 559.6, 94.7, 0.6},
    {"maxcut", "G13", 580, 647.1, 584.1, 93.9, 0.7},
    {"maxcut", "G32", 1398, 1567.6, 1415.9, 89.4, 1.3},
    {"maxcut", "G33", 1376, 1544.3, 1387.4, 93.2, 0.8},
    {"maxcut", "G34", 1372, 1546.7, 1388.2, 90.7, 1.2},
    {"miqcp", "bqp50-1", -2098, -2345.5, -2105.4, 97, 0.4},
    {"miqcp", "bqp100-1", -7970, -8721.1, -8101.8, 82.5, 1.7},
    {"miqcp", "gka1a", -3414, -3623.3, -3428.5, 93.1, 0.4},
    {"miqcp", "gka2a", -6063, -6204.3, -6063, 100, 0},
    {"miqcp", "gka3a", -6037, -6546.2, -6106.3, 86.4, 1.1},
    {"miqcp", "gka4a", -8598, -8935.1, -8676, 76.9, 0.9},
    {"miqcp", "gka5a", -5737, -5979.9, -5750, 94.6, 0.2},
    {"miqcp", "gka6a", -3980, -4190.2, -3982.5, 98.8, 0.1},
    {"miqcp", "gka7a", -4541, -4696.6, -4541.1, 100, 0},
    {"miqcp", "gka8a", -11109, -11283.8, -11114, 97.1, 0.05},
    {"miqcp", "gka1b", -133, -362.9, -183.8, 77.9, 38.2},
    {"miqcp", "gka2b", -121, -505.7, -282.5, 58, 133.5},
    {"miqcp", "gka3b", -118, -718, -437.7, 46.7, 270.9},
    {"miqcp", "gka4b", -129, -809.8, -571.5, 35, 343},
    {"miqcp", "gka5b", -150, -1034.8, -705.5, 37.2, 370.3},
    {"miqcp", "gka6b", -146, -1279, -833.5, 39.3, 470.9},
    {"miqcp", "gka7b", -160, -1362.5, -982.6, 31.6, 514.1},
    {"miqcp", "gka8b", -145, -1479.1, -1120.9, 26.8, 673},
    {"miqcp", "gka9b", -137, -1663.6, -1212.6, 29.5, 785.1},
    {"miqcp", "gka10b", -154, -2073.1, -1612.7, 24, 947.2},
    {"miqcp", "gka1c", -5058, -5161.1, -5073.7, 84.8, 0.3},
    {"miqcp", "gka2c", -6213, -6392.6, -6246.2, 81.5, 0.5},
    {"miqcp", "gka3c", -6665, -6849.9, -6688.1, 87.5, 0.3},
    {"miqcp", "gka4c", -7398, -7647.1, -7462.8, 74, 0.9},
    {"miqcp", "gka5c", -7362, -7684.5, -7412.8, 84.2, 0.7},
    {"miqcp", "gka6c", -5824, -6065.8, -5847.4, 90.3, 0.4},
    {"miqcp", "gka7c", -7225, -7422.7, -7248.7, 88, 0.3},
    {"miqcp", "gka1d", -6333, -6592.7, -6369.6, 85.9, 0.6},
    {"miqcp", "gka2d", -6579, -7234.2, -6811.6, 64.5, 3.5},
    {"miqcp", "gka3d", -9261, -9963, -9523.6, 62.6, 2.8},
    {"miqcp", "gka4d", -10727, -11592.5, -11096.5, 57.3, 3.4},
    {"miqcp", "gka5d", -11626, -12632.1, -12185, 44.4, 4.8},
    {"miqcp", "gka6d", -14207, -15235.3, -14720.2, 50.1, 3.6},
    {"miqcp", "gka7d", -14476, -15672, -15173.6, 41.7, 4.8},
    {"miqcp", "gka8d", -16352, -17353.3, -16794.3, 55.8, 2.7},
    {"miqcp", "gka9d", -15656, -17010.9, -16409.6, 44.4, 4.8},
    {"miqcp", "gka10d", -19102, -20421.4, -19863.8, 44.3, 4},
    {"miqcp", "qplib0032", 10.1, -19751, -15440, 21.8, 152971.3},
    {"miqcp", "qplib0067", -110942, -116480, -112478, 72.3, 1.4},
    {"miqcp", "qplib0633", 79.6, 70.9, 75.7, 55.2, 4.9},
    {"miqcp", "qplib2512", 135028, -441284, 82909, 91, 38.6},
    {"miqcp", "qplib3762", -296, -345.6, -309.5, 72.8, 4.6},
    {"miqcp", "qplib5935", 4758, 67494, 28812, 61.7, 505.5},
    {"miqcp", "qplib5944", 1829, 66934, 19784, 72.4, 981.7},
    {"maxcliq", "g05_60", 0.8, 29.9, 6.1, 81.8, 662.5},
    {"maxcliq", "g05_80", 0.9, 39.9, 8.9, 79.5, 888.9},
    {"maxcliq", "g05_100", 0.8, 50, 18.4, 64.2, 2200},
    {"maxcliq", "pm1d_80", 1, 78.2, 17.9, 78.1, 1690},
    {"maxcliq", "pm1d_100", 1, 98, 37.6, 62.3, 3660},
    {"maxcliq", "pm1s_80", 0.7, 8.9, 4.6, 52.1, 557.1},
    {"maxcliq", "pw01_100", 0.6, 10.6, 5.4, 51.8, 800},
    {"maxcliq", "pw05_100", 0.8, 49.8, 18.9, 63, 2262.5},
    {"maxcliq", "pw09_100", 1, 89.2, 34, 62.5, 3300},
    {"qc", "bqp50-1", -99, -215.7, -172.5, 37, 74.2},
    {"qc", "bqp100-1", -67.2, -323.1, -290, 12.9, 331.5},
    {"qc", "gka1a", -109.5, -241.8, -213.8, 21.2, 95.3},
    {"qc", "gka2a", -140.7, -275.3, -251.6, 17.6, 78.8},
    {"qc", "gka3a", -143.2, -300, -275, 15.9, 92},
    {"qc", "gka4a", -126.2, -311, -280, 16.8, 121.9},
    {"qc", "gka5a", -180.2, -351.8, -299.1, 30.7, 66},
    {"qc", "gka8a", -122.5, -320.1, -299.5, 10.4, 144.5},
    {"qc", "gka4b", -63, -381.4, -280.8, 31.6, 345.7},
    {"qc", "gka5b", -63, -446.8, -327.4, 31.1, 419.7},
    {"qc", "gka6b", -63, -496.6, -366.8, 29.9, 482.2},
    {"qc", "gka7b", -63, -518.3, -404.3, 25, 541.7},
    {"qc", "gka8b", -63, -534.5, -430.1, 22.1, 582.7},
    {"qc", "gka9b", -63, -573, -455.8, 23, 623.5},
    {"qc", "gka10b", -63, -639.4, -533.6, 18.4, 747},
    {"qc", "gka2c", -159.1, -290, -255.4, 26.4, 60.5},
    {"qc", "gka3c", -126.3, -271.2, -231.3, 27.5, 83.1},
    {"qc", "gka4c", -123, -292.7, -247.9, 26.4, 101.5},
    {"qc", "gka5c", -114, -239.1, -220.4, 14.9, 93.3},
    {"qc", "gka6c", -100, -198.8, -182.4, 16.6, 82.4},
    {"qc", "gka7c", -100, -225.8, -208.5, 13.8, 108.5},
    {"qc", "gka1d", -75, -197.9, -174.5, 19, 132.7},
    {"qc", "gka2d", -87.2, -259.6, -229.5, 17.5, 163.2},
    {"qc", "gka3d", -88.1, -304, -267.5, 16.9, 203.6},
    {"qc", "gka4d", -105.5, -375.2, -317.5, 21.4, 201},
    {"qc", "gka5d", -131.9, -383.6, -332.3, 20.4, 152},
    {"qc", "gka6d", -137.7, -443.1, -378.9, 21, 175.2},
    {"qc", "gka7d", -156.3, -453.9, -397.4, 19, 154.3},
    {"qc", "gka8d", -147.6, -488, -414.2, 21.7, 180.6},
    {"qc", "gka9d", -179.6, -539.7, -456.8, 23, 154.3},
    {"qc", "gka10d", -187, -552.4, -478.4, 20.3, 155.8},
    {"qc", "qplib1535", -11.6, -13.9, -13.2, 30.4, 13.8},
    {"qc", "qplib1661", -16, -18.4, -17.5, 37.5, 9.4},
    {"qc", "qplib1675", -75.7, -93.1, -83.8, 53.4, 10.7},
    {"qc", "qplib1703", -132.8, -152.8, -143.5, 46.5, 8.06},
    {"qc", "qplib1773", -14.6, -17.3, -16.4, 33.3, 12.3},
    {"globallip", "net_1_5", 0.38, 0.44, 0.38, 100, 0},
    {"globallip", "net_1_10", 0.69, 0.72, 0.69, 100, 0},
    {"globallip", "net_1_15", 1.72, 1.86, 1.73, 92.86, 0.58},
    {"globallip", "net_1_20", 2.68, 2.88, 2.75, 65, 2.61},
    {"globallip", "net_1_25", 3.56, 3.83, 3.68, 55.56, 3.37},
    {"globallip", "net_1_30", 5.6, 6.16, 6.06, 17.86, 8.21},
    {"globallip", "net_1_35", 7.77, 8.92, 8.66, 22.61, 11.455},
    {"globallip", "net_1_40", 7.4, 9.07, 8.78, 17.37, 18.65},
    {"locallip", "net_1_5", 0.247, 0.251, 0.247, 100, 0},
    {"locallip", "net_1_10", 0.581, 0.61, 0.605, 17.2, 4.13},
    {"locallip", "net_1_15", 1.384, 1.449, 1.435, 21.54, 3.68},
    {"locallip", "net_1_20", 1.73, 2.23, 2.19, 8, 26.59},
    {"locallip", "net_1_25", 2.03, 2.73, 2.64, 12.86, 30.05},
    {"locallip", "net_1_30", 4.1, 5.09, 5.04, 5.05, 22.93},
    {"locallip", "net_1_35", 5.84, 7.12, 7.03, 7.03, 20.38},
    {"locallip", "net_1_40", 5.02, 7.3, 7.07, 10.09, 40.84},
    {"globalcert", "net_1_5", 2.63, 3.51, 2.74, 87.5, 4.18},
    {"globalcert", "net_1_10", 3.49, 4.88, 4.48, 28.78, 28.37},
    {"globalcert", "net_1_15", 5.61, 8.2, 7.41, 30.5, 32.09},
    {"globalcert", "net_1_20", 9.24, 16.48, 15.48, 13.81, 67.53},
    {"globalcert", "net_1_25", 14.4, 26.68, 25.57, 9.04, 77.57},
    {"globalcert", "net_1_30", 17.22, 38.06, 35.89, 10.41, 108.42},
    {"globalcert", "net_1_35", 26.71, 59.18, 57.39, 5.51, 114.86},
    {"globalcert", "net_1_40", 22.94, 57.59, 54.18, 9.84, 136.18},
    {"globalcert", "net_1_45", 22.57, 57.56, 54.68, 8.23, 142.27},
    {"globalcert", "net_1_50", 27.34, 73.59, 69.92, 7.94, 155.74},
    {"localcert", "net_1_5", 0.19, 0.191, 0.191, 0, 0.53},
    {"localcert", "net_1_10", 0.021, 0.025, 0.024, 25, 14.29},
    {"localcert", "net_1_15", 0.027, 0.053, 0.053, 0, 96.3},
    {"localcert", "net_1_20", 0.269, 0.299, 0.298, 3.33, 10.78},
    {"localcert", "net_1_25", -0.104, -0.025, -0.031, 7.59, 70.19},
    {"localcert", "net_1_30", 0.669, 0.81, 0.803, 4.96, 20.03},
    {"localcert", "net_1_35", 0.825, 1.107, 1.107, 0, 34.18},
    {"localcert", "net_1_40", 0.741, 0.949, 0.94, 4.33, 26.86},
    {"localcert", "net_1_45", 0.265, 0.603, 0.599, 1.18, 126.04},
    {"localcert", "net_1_50", 0.614, 0.92, 0.914, 1.96, 48.86},
}};

}  // namespace tables
