"""Published values used as fixtures, transcribed as plain Schur displays."""

from __future__ import annotations

THOM_1 = "S_{111}+5S_{12}+6S_3"
THOM_2 = "S_{222}+5S_{123}+6S_{114}+19S_{24}+30S_{15}+36S_6+5S_{33}"

E_TABLE = {
    2: (5,),
    3: (24,),
    4: (89, 24),
    5: (300, 113),
    6: (965, 413, 113),
    7: (3024, 1378, 526),
    8: (9329, 4402, 1904, 526),
}

H_BAR = {
    2: "5S_{33}",
    3: "24S_{45}",
    4: "89S_{57}+24S_{66}",
    5: "300S_{69}+113S_{78}",
    6: "965S_{7,11}+413S_{8,10}+113S_{99}",
    7: "3024S_{8,13}+1378S_{9,12}+526S_{10,11}",
}

H = {
    2: "5S_{33}",
    3: "5S_{144}+24S_{45}",
    4: "5S_{255}+24S_{156}+24S_{66}+89S_{57}",
    5: "5S_{366}+24S_{267}+24S_{177}+89S_{168}+113S_{78}+300S_{69}",
    6: "5S_{477}+24S_{378}+24S_{288}+89S_{279}+113S_{189}+300S_{1,7,10}+113S_{99}+413S_{8,10}"
    "+965S_{7,11}",
    7: "5S_{588}+24S_{489}+24S_{399}+89S_{3,8,10}+113S_{2,9,10}+300S_{2,8,11}+113S_{1,10,10}"
    "+413S_{1,9,11}+965S_{1,8,12}+526S_{10,11}+1378S_{9,12}+3024S_{8,13}",
}
