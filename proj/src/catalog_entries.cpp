// Embedded catalog entries. A human-diffable mirror of the same data lives
// in data/catalog/ (one enumerator file per entry plus manifest.tsv); the
// unit tests check the two copies against each other.
#include "catalog_raw.hpp"

namespace latsec::detail {

const RawEntry kRawEntries[] = {
    {"n6_efsd_d2", 6, 3, 2, CodeKind::efsd, false,
     "Huffman-Pless 2003", "1",
     "0:1 2:3 4:3 6:1"},
    {"n6_ofsd_d3", 6, 3, 3, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.172",
     "0:1 3:4 4:3"},
    {"n8_sd_d4", 8, 4, 4, CodeKind::sd, false,
     "Huffman-Pless 2003", "1.333",
     "0:1 4:14 8:1"},
    {"n8_ofsd_d3a", 8, 4, 3, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.282",
     "0:1 3:3 4:7 5:4 7:1"},
    {"n8_ofsd_d3b", 8, 4, 3, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.264",
     "0:1 3:4 4:5 5:4 6:2"},
    {"n10_efsd_d4", 10, 5, 4, CodeKind::efsd, false,
     "Huffman-Pless 2003", "1.455",
     "0:1 4:15 6:15 10:1"},
    {"n10_ofsd_d4", 10, 5, 4, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.478",
     "0:1 4:10 5:16 8:5"},
    {"n12_sd_d4", 12, 6, 4, CodeKind::sd, false,
     "Lin-Oggier 2013", "1.6",
     "0:1 4:15 6:32 8:15 12:1"},
    {"n12_efsd_d4", 12, 6, 4, CodeKind::efsd, false,
     "Betsumiya-Gulliver-Harada 1999", "1.6",
     "0:1 4:15 6:32 8:15 12:1"},
    {"n12_ofsd_d4", 12, 6, 4, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.657",
     "0:1 4:6 5:24 6:16 8:9 9:8"},
    {"n14_sd_d4", 14, 7, 4, CodeKind::sd, false,
     "Lin-Oggier 2013", "1.778",
     "0:1 4:14 6:49 8:49 10:14 14:1"},
    {"n14_efsd_d2", 14, 7, 2, CodeKind::efsd, false,
     "Betsumiya-Gulliver-Harada 1999", "1.6",
     "0:1 2:1 4:15 6:47 8:47 10:15 12:1 14:1"},
    {"n14_ofsd_d4", 14, 7, 4, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "1.875",
     "0:1 4:3 5:24 6:36 7:16 8:11 9:24 10:12 12:1"},
    {"n16_sd_d4", 16, 8, 4, CodeKind::sd, false,
     "Lin-Oggier 2013", "2",
     "0:1 4:12 6:64 8:102 10:64 12:12 16:1"},
    {"n16_efsd_d4", 16, 8, 4, CodeKind::efsd, false,
     "Betsumiya-Harada 2001b", "2.133",
     "0:1 4:4 6:96 8:54 10:96 12:4 16:1"},
    {"n16_ofsd_d5", 16, 8, 5, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "2.141",
     "0:1 5:24 6:44 7:40 8:45 9:40 10:28 11:24 12:10"},
    {"n18_sd_d4", 18, 9, 4, CodeKind::sd, false,
     "Lin-Oggier 2013", "2.286",
     "0:1 4:9 6:75 8:171 10:171 12:75 14:9 18:1"},
    {"n18_efsd_d6", 18, 9, 6, CodeKind::efsd, false,
     "Sloane-Heninger 2006", "2.485",
     "0:1 6:102 8:153 10:153 12:102 18:1"},
    {"n18_ofsd_d5", 18, 9, 5, CodeKind::ofsd, true,
     "tailbiting construction", "2.424",
     "0:1 5:18 6:48 7:63 8:81 9:100 10:72 11:54 12:54 13:18 15:3"},
    {"n20_sd_d4", 20, 10, 4, CodeKind::sd, false,
     "Lin-Oggier 2013", "2.667",
     "0:1 4:5 6:80 8:250 10:352 12:250 14:80 16:5 20:1"},
    {"n20_efsd_d6", 20, 10, 6, CodeKind::efsd, false,
     "Fields-Gaborit-Huffman-Pless 2001", "2.813",
     "0:1 6:90 8:255 10:332 12:255 14:90 20:1"},
    {"n20_ofsd_d6", 20, 10, 6, CodeKind::ofsd, false,
     "Betsumiya-Gulliver-Harada 1999", "2.868",
     "0:1 6:40 7:160 8:130 10:176 11:320 12:120 14:40 15:32 16:5"},
    {"n22_sd_d6", 22, 11, 6, CodeKind::sd, false,
     "Lin-Oggier 2013", "3.2",
     "0:1 6:77 8:330 10:616 12:616 14:330 16:77 22:1"},
    {"n22_ofsd_d6", 22, 11, 6, CodeKind::ofsd, true,
     "tailbiting construction", "3.243",
     "0:1 6:44 7:121 8:143 9:231 10:319 11:298 12:330 13:286 14:154 15:77"
     " 16:22 17:11 18:11"},
    {"n22_ofsd_d7", 22, 11, 7, CodeKind::ofsd, false,
     "Betsumiya-Harada 2001", "3.335",
     "0:1 7:176 8:330 11:672 12:616 15:176 16:77"},
    {"n24_sd_d8", 24, 12, 8, CodeKind::sd, false,
     "MacWilliams-Sloane 1977 (Golay)", "3.879",
     "0:1 8:759 12:2576 16:759 24:1"},
    {"n24_efsd_d6", 24, 12, 6, CodeKind::efsd, true,
     "tailbiting construction", "3.657",
     "0:1 6:64 8:375 10:960 12:1296 14:960 16:375 18:64 24:1"},
    {"n30_sd_d6", 30, 15, 6, CodeKind::sd, false,
     "Conway-Sloane 1990", "5.689",
     "0:1 6:19 8:393 10:1848 12:5192 14:8931 16:8931 18:5192 20:1848"
     " 22:393 24:19 30:1"},
    {"n30_efsd_d8", 30, 15, 8, CodeKind::efsd, false,
     "Bouyuklieva-Bouyukliev 2010", "5.843",
     "0:1 8:450 10:1848 12:5040 14:9045 16:9045 18:5040 20:1848 22:450"
     " 30:1"},
    {"n30_ofsd_d7", 30, 15, 7, CodeKind::ofsd, true,
     "tailbiting construction", "5.785",
     "0:1 7:60 8:210 9:500 10:930 11:1560 12:2570 13:3660 14:4530 15:4824"
     " 16:4335 17:3660 18:2710 19:1560 20:918 21:500 22:150 23:60 24:30"},
    {"n32_sd_d8_type2", 32, 16, 8, CodeKind::sd, false,
     "Sloane-Heninger 2006", "6.564",
     "0:1 8:620 12:13888 16:36518 20:13888 24:620 32:1"},
    {"n32_sd_d8_type1", 32, 16, 8, CodeKind::sd, false,
     "Sloane-Heninger 2006", "6.737",
     "0:1 8:364 10:2048 12:6720 14:14336 16:18598 18:14336 20:6720 22:2048"
     " 24:364 32:1"},
    {"n32_efsd_d8", 32, 16, 8, CodeKind::efsd, true,
     "tailbiting construction", "6.748",
     "0:1 8:348 10:2176 12:6272 14:15232 16:17478 18:15232 20:6272 22:2176"
     " 24:348 32:1"},
    {"n32_ofsd_d7", 32, 16, 7, CodeKind::ofsd, true,
     "tailbiting construction", "6.628",
     "0:1 7:64 8:176 9:384 10:984 11:2096 12:3500 13:5136 14:7096 15:8624"
     " 16:9133 17:8848 18:7384 19:5136 20:3292 21:1968 22:1032 23:464"
     " 24:154 25:48 26:16"},
    {"n40_sd_d8_type2", 40, 20, 8, CodeKind::sd, false,
     "Conway-Sloane 1990", "11.977",
     "0:1 8:285 12:21280 16:239970 20:525504 24:239970 28:21280 32:285"
     " 40:1"},
    {"n40_sd_d8_type1", 40, 20, 8, CodeKind::sd, false,
     "Conway-Sloane 1990", "12.191",
     "0:1 8:125 10:1664 12:10720 14:44160 16:119810 18:216320 20:262976"
     " 22:216320 24:119810 26:44160 28:10720 30:1664 32:125 40:1"},
    {"n40_efsd_d8", 40, 20, 8, CodeKind::efsd, true,
     "tailbiting construction", "12.134",
     "0:1 8:150 10:1564 12:10770 14:44460 16:119385 18:216120 20:263676"
     " 22:216120 24:119385 26:44460 28:10770 30:1564 32:150 40:1"},
    {"n40_ofsd_d9", 40, 20, 9, CodeKind::ofsd, true,
     "tailbiting construction", "12.364",
     "0:1 9:360 10:922 11:2060 12:5775 13:11340 14:20980 15:39064 16:60185"
     " 17:83680 18:109740 19:125640 20:130046 21:125640 22:107680 23:83680"
     " 24:60830 25:39064 26:22250 27:11340 28:4755 29:2060 30:1084 31:360"
     " 32:40"},
    {"n42_efsd_d10", 42, 21, 10, CodeKind::efsd, true,
     "tailbiting construction", "14.482",
     "0:1 10:1722 12:10619 14:49815 16:157563 18:341530 20:487326"
     " 22:487326 24:341530 26:157563 28:49815 30:10619 32:1722 42:1"},
    {"n56_efsd_d12", 56, 28, 12, CodeKind::efsd, true,
     "tailbiting construction", "42.838",
     "0:1 12:4634 14:44828 16:307650 18:1575924 20:5865384 22:15969660"
     " 24:32430013 26:49502068 28:57035132 30:49502068 32:32430013"
     " 34:15969660 36:5865384 38:1575924 40:307650 42:44828 44:4634 56:1"},
    {"n70_sd_d12", 70, 35, 12, CodeKind::sd, false,
     "Harada 1997", "127.712",
     "0:1 12:832 14:10770 16:142279 18:1353320 20:9437352 22:49957193"
     " 24:204165154 26:650426976 28:1627816992 30:3221537516 32:5066102223"
     " 34:6348918576 36:6348918576 38:5066102223 40:3221537516"
     " 42:1627816992 44:650426976 46:204165154 48:49957193 50:9437352"
     " 52:1353320 54:142279 56:10770 58:832 70:1"},
    {"n70_efsd_d12", 70, 35, 12, CodeKind::efsd, true,
     "tailbiting construction", "128.073",
     "0:1 12:455 14:11235 16:145985 18:1348130 20:9430974 22:49926695"
     " 24:204318835 26:650297655 28:1627628010 30:3221888194 32:5066010495"
     " 34:6348862520 36:6348862520 38:5066010495 40:3221888194"
     " 42:1627628010 44:650297655 46:204318835 48:49926695 50:9430974"
     " 52:1348130 54:145985 56:11235 58:455 70:1"},
    {"n70_ofsd_d13", 70, 35, 13, CodeKind::ofsd, true,
     "tailbiting construction", "128.368",
     "0:1 13:1225 14:6125 15:21700 16:72590 17:232680 18:676410 19:1838375"
     " 20:4711427 21:11204975 22:24964310 23:52191335 24:102128145"
     " 25:187879531 26:325261230 27:529884495 28:813742900 29:1178595250"
     " 30:1610725606 31:2078727420 32:2533396005 33:2916830420"
     " 34:3174375820 35:3264970134 36:3174028690 37:2917093830"
     " 38:2533383720 39:2078410810 40:1610915418 41:1178784530 42:813674900"
     " 43:529809070 44:325223220 45:187929077 46:102154885 47:52153640"
     " 48:24962700 49:11215020 50:4706842 51:1841315 52:682115 53:232155"
     " 54:69930 55:20727 56:5845 57:1435 58:350 59:35"},
    {"n78_efsd_d14", 78, 39, 14, CodeKind::efsd, true,
     "tailbiting construction", "241.042",
     "0:1 14:3471 16:63336 18:772980 20:7219368 22:51527346 24:287551706"
     " 26:1266693912 28:4442835540 30:12510913844 32:28453167444"
     " 34:52493946648 36:78823802720 38:96539408628 40:96539408628"
     " 42:78823802720 44:52493946648 46:28453167444 48:12510913844"
     " 50:4442835540 52:1266693912 54:287551706 56:51527346 58:7219368"
     " 60:772980 62:63336 64:3471 78:1"},
    {"n108_efsd_d14", 108, 54, 14, CodeKind::efsd, true,
     "tailbiting construction", "2573.53",
     "0:1 14:756 16:5022 18:30354 20:371223 22:5418846 24:71085987"
     " 26:765738684 28:6738702390 30:48969093384 32:296438923962"
     " 34:1505875815558 36:6456109668648 38:23473804361040"
     " 40:72678688668432 42:192289983824466 44:436005471914253"
     " 46:849263560631748 48:1423721807648100 50:2057133110131674"
     " 52:2564434300382478 54:2759767104647972 56:2564434300382478"
     " 58:2057133110131674 60:1423721807648100 62:849263560631748"
     " 64:436005471914253 66:192289983824466 68:72678688668432"
     " 70:23473804361040 72:6456109668648 74:1505875815558 76:296438923962"
     " 78:48969093384 80:6738702390 82:765738684 84:71085987 86:5418846"
     " 88:371223 90:30354 92:5022 94:756 108:1"},
};

const int kRawEntryCount = sizeof(kRawEntries) / sizeof(kRawEntries[0]);

}  // namespace latsec::detail
