"""Generated branchless median-selection networks.

Median-pruned Batcher odd-even mergesort networks: every compare-exchange
lowers to min/max instructions, so selection cost is data-independent (no
branch misprediction on random pixels). Generated from the standard
Batcher construction with backward-liveness pruning to the median wire;
correctness follows from the 0-1 principle for the full network plus
soundness of dead compare-exchange elimination, and is checked against
numpy.median in the test suite.
"""

from .noise import _jit

@_jit
def median25(v):
    """Median of v[:25]; v is scratch and gets clobbered."""
    v[0], v[1] = min(v[0], v[1]), max(v[0], v[1])
    v[2], v[3] = min(v[2], v[3]), max(v[2], v[3])
    v[4], v[5] = min(v[4], v[5]), max(v[4], v[5])
    v[6], v[7] = min(v[6], v[7]), max(v[6], v[7])
    v[8], v[9] = min(v[8], v[9]), max(v[8], v[9])
    v[10], v[11] = min(v[10], v[11]), max(v[10], v[11])
    v[12], v[13] = min(v[12], v[13]), max(v[12], v[13])
    v[14], v[15] = min(v[14], v[15]), max(v[14], v[15])
    v[16], v[17] = min(v[16], v[17]), max(v[16], v[17])
    v[18], v[19] = min(v[18], v[19]), max(v[18], v[19])
    v[20], v[21] = min(v[20], v[21]), max(v[20], v[21])
    v[22], v[23] = min(v[22], v[23]), max(v[22], v[23])
    v[0], v[2] = min(v[0], v[2]), max(v[0], v[2])
    v[1], v[3] = min(v[1], v[3]), max(v[1], v[3])
    v[4], v[6] = min(v[4], v[6]), max(v[4], v[6])
    v[5], v[7] = min(v[5], v[7]), max(v[5], v[7])
    v[8], v[10] = min(v[8], v[10]), max(v[8], v[10])
    v[9], v[11] = min(v[9], v[11]), max(v[9], v[11])
    v[12], v[14] = min(v[12], v[14]), max(v[12], v[14])
    v[13], v[15] = min(v[13], v[15]), max(v[13], v[15])
    v[16], v[18] = min(v[16], v[18]), max(v[16], v[18])
    v[17], v[19] = min(v[17], v[19]), max(v[17], v[19])
    v[20], v[22] = min(v[20], v[22]), max(v[20], v[22])
    v[21], v[23] = min(v[21], v[23]), max(v[21], v[23])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[0], v[4] = min(v[0], v[4]), max(v[0], v[4])
    v[1], v[5] = min(v[1], v[5]), max(v[1], v[5])
    v[2], v[6] = min(v[2], v[6]), max(v[2], v[6])
    v[3], v[7] = min(v[3], v[7]), max(v[3], v[7])
    v[8], v[12] = min(v[8], v[12]), max(v[8], v[12])
    v[9], v[13] = min(v[9], v[13]), max(v[9], v[13])
    v[10], v[14] = min(v[10], v[14]), max(v[10], v[14])
    v[11], v[15] = min(v[11], v[15]), max(v[11], v[15])
    v[16], v[20] = min(v[16], v[20]), max(v[16], v[20])
    v[17], v[21] = min(v[17], v[21]), max(v[17], v[21])
    v[18], v[22] = min(v[18], v[22]), max(v[18], v[22])
    v[19], v[23] = min(v[19], v[23]), max(v[19], v[23])
    v[2], v[4] = min(v[2], v[4]), max(v[2], v[4])
    v[3], v[5] = min(v[3], v[5]), max(v[3], v[5])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[18], v[20] = min(v[18], v[20]), max(v[18], v[20])
    v[19], v[21] = min(v[19], v[21]), max(v[19], v[21])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[3], v[4] = min(v[3], v[4]), max(v[3], v[4])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[19], v[20] = min(v[19], v[20]), max(v[19], v[20])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[0], v[8] = min(v[0], v[8]), max(v[0], v[8])
    v[1], v[9] = min(v[1], v[9]), max(v[1], v[9])
    v[2], v[10] = min(v[2], v[10]), max(v[2], v[10])
    v[3], v[11] = min(v[3], v[11]), max(v[3], v[11])
    v[4], v[12] = min(v[4], v[12]), max(v[4], v[12])
    v[5], v[13] = min(v[5], v[13]), max(v[5], v[13])
    v[6], v[14] = min(v[6], v[14]), max(v[6], v[14])
    v[7], v[15] = min(v[7], v[15]), max(v[7], v[15])
    v[16], v[24] = min(v[16], v[24]), max(v[16], v[24])
    v[4], v[8] = min(v[4], v[8]), max(v[4], v[8])
    v[5], v[9] = min(v[5], v[9]), max(v[5], v[9])
    v[6], v[10] = min(v[6], v[10]), max(v[6], v[10])
    v[7], v[11] = min(v[7], v[11]), max(v[7], v[11])
    v[20], v[24] = min(v[20], v[24]), max(v[20], v[24])
    v[2], v[4] = min(v[2], v[4]), max(v[2], v[4])
    v[3], v[5] = min(v[3], v[5]), max(v[3], v[5])
    v[6], v[8] = min(v[6], v[8]), max(v[6], v[8])
    v[7], v[9] = min(v[7], v[9]), max(v[7], v[9])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[18], v[20] = min(v[18], v[20]), max(v[18], v[20])
    v[19], v[21] = min(v[19], v[21]), max(v[19], v[21])
    v[22], v[24] = min(v[22], v[24]), max(v[22], v[24])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[3], v[4] = min(v[3], v[4]), max(v[3], v[4])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[7], v[8] = min(v[7], v[8]), max(v[7], v[8])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[19], v[20] = min(v[19], v[20]), max(v[19], v[20])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[23], v[24] = min(v[23], v[24]), max(v[23], v[24])
    v[0], v[16] = min(v[0], v[16]), max(v[0], v[16])
    v[1], v[17] = min(v[1], v[17]), max(v[1], v[17])
    v[2], v[18] = min(v[2], v[18]), max(v[2], v[18])
    v[3], v[19] = min(v[3], v[19]), max(v[3], v[19])
    v[4], v[20] = min(v[4], v[20]), max(v[4], v[20])
    v[5], v[21] = min(v[5], v[21]), max(v[5], v[21])
    v[6], v[22] = min(v[6], v[22]), max(v[6], v[22])
    v[7], v[23] = min(v[7], v[23]), max(v[7], v[23])
    v[8], v[24] = min(v[8], v[24]), max(v[8], v[24])
    v[8], v[16] = min(v[8], v[16]), max(v[8], v[16])
    v[9], v[17] = min(v[9], v[17]), max(v[9], v[17])
    v[10], v[18] = min(v[10], v[18]), max(v[10], v[18])
    v[11], v[19] = min(v[11], v[19]), max(v[11], v[19])
    v[12], v[20] = min(v[12], v[20]), max(v[12], v[20])
    v[13], v[21] = min(v[13], v[21]), max(v[13], v[21])
    v[6], v[10] = min(v[6], v[10]), max(v[6], v[10])
    v[7], v[11] = min(v[7], v[11]), max(v[7], v[11])
    v[12], v[16] = min(v[12], v[16]), max(v[12], v[16])
    v[13], v[17] = min(v[13], v[17]), max(v[13], v[17])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    return v[12]


@_jit
def median49(v):
    """Median of v[:49]; v is scratch and gets clobbered."""
    v[0], v[1] = min(v[0], v[1]), max(v[0], v[1])
    v[2], v[3] = min(v[2], v[3]), max(v[2], v[3])
    v[4], v[5] = min(v[4], v[5]), max(v[4], v[5])
    v[6], v[7] = min(v[6], v[7]), max(v[6], v[7])
    v[8], v[9] = min(v[8], v[9]), max(v[8], v[9])
    v[10], v[11] = min(v[10], v[11]), max(v[10], v[11])
    v[12], v[13] = min(v[12], v[13]), max(v[12], v[13])
    v[14], v[15] = min(v[14], v[15]), max(v[14], v[15])
    v[16], v[17] = min(v[16], v[17]), max(v[16], v[17])
    v[18], v[19] = min(v[18], v[19]), max(v[18], v[19])
    v[20], v[21] = min(v[20], v[21]), max(v[20], v[21])
    v[22], v[23] = min(v[22], v[23]), max(v[22], v[23])
    v[24], v[25] = min(v[24], v[25]), max(v[24], v[25])
    v[26], v[27] = min(v[26], v[27]), max(v[26], v[27])
    v[28], v[29] = min(v[28], v[29]), max(v[28], v[29])
    v[30], v[31] = min(v[30], v[31]), max(v[30], v[31])
    v[32], v[33] = min(v[32], v[33]), max(v[32], v[33])
    v[34], v[35] = min(v[34], v[35]), max(v[34], v[35])
    v[36], v[37] = min(v[36], v[37]), max(v[36], v[37])
    v[38], v[39] = min(v[38], v[39]), max(v[38], v[39])
    v[40], v[41] = min(v[40], v[41]), max(v[40], v[41])
    v[42], v[43] = min(v[42], v[43]), max(v[42], v[43])
    v[44], v[45] = min(v[44], v[45]), max(v[44], v[45])
    v[46], v[47] = min(v[46], v[47]), max(v[46], v[47])
    v[0], v[2] = min(v[0], v[2]), max(v[0], v[2])
    v[1], v[3] = min(v[1], v[3]), max(v[1], v[3])
    v[4], v[6] = min(v[4], v[6]), max(v[4], v[6])
    v[5], v[7] = min(v[5], v[7]), max(v[5], v[7])
    v[8], v[10] = min(v[8], v[10]), max(v[8], v[10])
    v[9], v[11] = min(v[9], v[11]), max(v[9], v[11])
    v[12], v[14] = min(v[12], v[14]), max(v[12], v[14])
    v[13], v[15] = min(v[13], v[15]), max(v[13], v[15])
    v[16], v[18] = min(v[16], v[18]), max(v[16], v[18])
    v[17], v[19] = min(v[17], v[19]), max(v[17], v[19])
    v[20], v[22] = min(v[20], v[22]), max(v[20], v[22])
    v[21], v[23] = min(v[21], v[23]), max(v[21], v[23])
    v[24], v[26] = min(v[24], v[26]), max(v[24], v[26])
    v[25], v[27] = min(v[25], v[27]), max(v[25], v[27])
    v[28], v[30] = min(v[28], v[30]), max(v[28], v[30])
    v[29], v[31] = min(v[29], v[31]), max(v[29], v[31])
    v[32], v[34] = min(v[32], v[34]), max(v[32], v[34])
    v[33], v[35] = min(v[33], v[35]), max(v[33], v[35])
    v[36], v[38] = min(v[36], v[38]), max(v[36], v[38])
    v[37], v[39] = min(v[37], v[39]), max(v[37], v[39])
    v[40], v[42] = min(v[40], v[42]), max(v[40], v[42])
    v[41], v[43] = min(v[41], v[43]), max(v[41], v[43])
    v[44], v[46] = min(v[44], v[46]), max(v[44], v[46])
    v[45], v[47] = min(v[45], v[47]), max(v[45], v[47])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[25], v[26] = min(v[25], v[26]), max(v[25], v[26])
    v[29], v[30] = min(v[29], v[30]), max(v[29], v[30])
    v[33], v[34] = min(v[33], v[34]), max(v[33], v[34])
    v[37], v[38] = min(v[37], v[38]), max(v[37], v[38])
    v[41], v[42] = min(v[41], v[42]), max(v[41], v[42])
    v[45], v[46] = min(v[45], v[46]), max(v[45], v[46])
    v[0], v[4] = min(v[0], v[4]), max(v[0], v[4])
    v[1], v[5] = min(v[1], v[5]), max(v[1], v[5])
    v[2], v[6] = min(v[2], v[6]), max(v[2], v[6])
    v[3], v[7] = min(v[3], v[7]), max(v[3], v[7])
    v[8], v[12] = min(v[8], v[12]), max(v[8], v[12])
    v[9], v[13] = min(v[9], v[13]), max(v[9], v[13])
    v[10], v[14] = min(v[10], v[14]), max(v[10], v[14])
    v[11], v[15] = min(v[11], v[15]), max(v[11], v[15])
    v[16], v[20] = min(v[16], v[20]), max(v[16], v[20])
    v[17], v[21] = min(v[17], v[21]), max(v[17], v[21])
    v[18], v[22] = min(v[18], v[22]), max(v[18], v[22])
    v[19], v[23] = min(v[19], v[23]), max(v[19], v[23])
    v[24], v[28] = min(v[24], v[28]), max(v[24], v[28])
    v[25], v[29] = min(v[25], v[29]), max(v[25], v[29])
    v[26], v[30] = min(v[26], v[30]), max(v[26], v[30])
    v[27], v[31] = min(v[27], v[31]), max(v[27], v[31])
    v[32], v[36] = min(v[32], v[36]), max(v[32], v[36])
    v[33], v[37] = min(v[33], v[37]), max(v[33], v[37])
    v[34], v[38] = min(v[34], v[38]), max(v[34], v[38])
    v[35], v[39] = min(v[35], v[39]), max(v[35], v[39])
    v[40], v[44] = min(v[40], v[44]), max(v[40], v[44])
    v[41], v[45] = min(v[41], v[45]), max(v[41], v[45])
    v[42], v[46] = min(v[42], v[46]), max(v[42], v[46])
    v[43], v[47] = min(v[43], v[47]), max(v[43], v[47])
    v[2], v[4] = min(v[2], v[4]), max(v[2], v[4])
    v[3], v[5] = min(v[3], v[5]), max(v[3], v[5])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[18], v[20] = min(v[18], v[20]), max(v[18], v[20])
    v[19], v[21] = min(v[19], v[21]), max(v[19], v[21])
    v[26], v[28] = min(v[26], v[28]), max(v[26], v[28])
    v[27], v[29] = min(v[27], v[29]), max(v[27], v[29])
    v[34], v[36] = min(v[34], v[36]), max(v[34], v[36])
    v[35], v[37] = min(v[35], v[37]), max(v[35], v[37])
    v[42], v[44] = min(v[42], v[44]), max(v[42], v[44])
    v[43], v[45] = min(v[43], v[45]), max(v[43], v[45])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[3], v[4] = min(v[3], v[4]), max(v[3], v[4])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[19], v[20] = min(v[19], v[20]), max(v[19], v[20])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[25], v[26] = min(v[25], v[26]), max(v[25], v[26])
    v[27], v[28] = min(v[27], v[28]), max(v[27], v[28])
    v[29], v[30] = min(v[29], v[30]), max(v[29], v[30])
    v[33], v[34] = min(v[33], v[34]), max(v[33], v[34])
    v[35], v[36] = min(v[35], v[36]), max(v[35], v[36])
    v[37], v[38] = min(v[37], v[38]), max(v[37], v[38])
    v[41], v[42] = min(v[41], v[42]), max(v[41], v[42])
    v[43], v[44] = min(v[43], v[44]), max(v[43], v[44])
    v[45], v[46] = min(v[45], v[46]), max(v[45], v[46])
    v[0], v[8] = min(v[0], v[8]), max(v[0], v[8])
    v[1], v[9] = min(v[1], v[9]), max(v[1], v[9])
    v[2], v[10] = min(v[2], v[10]), max(v[2], v[10])
    v[3], v[11] = min(v[3], v[11]), max(v[3], v[11])
    v[4], v[12] = min(v[4], v[12]), max(v[4], v[12])
    v[5], v[13] = min(v[5], v[13]), max(v[5], v[13])
    v[6], v[14] = min(v[6], v[14]), max(v[6], v[14])
    v[7], v[15] = min(v[7], v[15]), max(v[7], v[15])
    v[16], v[24] = min(v[16], v[24]), max(v[16], v[24])
    v[17], v[25] = min(v[17], v[25]), max(v[17], v[25])
    v[18], v[26] = min(v[18], v[26]), max(v[18], v[26])
    v[19], v[27] = min(v[19], v[27]), max(v[19], v[27])
    v[20], v[28] = min(v[20], v[28]), max(v[20], v[28])
    v[21], v[29] = min(v[21], v[29]), max(v[21], v[29])
    v[22], v[30] = min(v[22], v[30]), max(v[22], v[30])
    v[23], v[31] = min(v[23], v[31]), max(v[23], v[31])
    v[32], v[40] = min(v[32], v[40]), max(v[32], v[40])
    v[33], v[41] = min(v[33], v[41]), max(v[33], v[41])
    v[34], v[42] = min(v[34], v[42]), max(v[34], v[42])
    v[35], v[43] = min(v[35], v[43]), max(v[35], v[43])
    v[36], v[44] = min(v[36], v[44]), max(v[36], v[44])
    v[37], v[45] = min(v[37], v[45]), max(v[37], v[45])
    v[38], v[46] = min(v[38], v[46]), max(v[38], v[46])
    v[39], v[47] = min(v[39], v[47]), max(v[39], v[47])
    v[4], v[8] = min(v[4], v[8]), max(v[4], v[8])
    v[5], v[9] = min(v[5], v[9]), max(v[5], v[9])
    v[6], v[10] = min(v[6], v[10]), max(v[6], v[10])
    v[7], v[11] = min(v[7], v[11]), max(v[7], v[11])
    v[20], v[24] = min(v[20], v[24]), max(v[20], v[24])
    v[21], v[25] = min(v[21], v[25]), max(v[21], v[25])
    v[22], v[26] = min(v[22], v[26]), max(v[22], v[26])
    v[23], v[27] = min(v[23], v[27]), max(v[23], v[27])
    v[36], v[40] = min(v[36], v[40]), max(v[36], v[40])
    v[37], v[41] = min(v[37], v[41]), max(v[37], v[41])
    v[38], v[42] = min(v[38], v[42]), max(v[38], v[42])
    v[39], v[43] = min(v[39], v[43]), max(v[39], v[43])
    v[2], v[4] = min(v[2], v[4]), max(v[2], v[4])
    v[3], v[5] = min(v[3], v[5]), max(v[3], v[5])
    v[6], v[8] = min(v[6], v[8]), max(v[6], v[8])
    v[7], v[9] = min(v[7], v[9]), max(v[7], v[9])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[18], v[20] = min(v[18], v[20]), max(v[18], v[20])
    v[19], v[21] = min(v[19], v[21]), max(v[19], v[21])
    v[22], v[24] = min(v[22], v[24]), max(v[22], v[24])
    v[23], v[25] = min(v[23], v[25]), max(v[23], v[25])
    v[26], v[28] = min(v[26], v[28]), max(v[26], v[28])
    v[27], v[29] = min(v[27], v[29]), max(v[27], v[29])
    v[34], v[36] = min(v[34], v[36]), max(v[34], v[36])
    v[35], v[37] = min(v[35], v[37]), max(v[35], v[37])
    v[38], v[40] = min(v[38], v[40]), max(v[38], v[40])
    v[39], v[41] = min(v[39], v[41]), max(v[39], v[41])
    v[42], v[44] = min(v[42], v[44]), max(v[42], v[44])
    v[43], v[45] = min(v[43], v[45]), max(v[43], v[45])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[3], v[4] = min(v[3], v[4]), max(v[3], v[4])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[7], v[8] = min(v[7], v[8]), max(v[7], v[8])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[19], v[20] = min(v[19], v[20]), max(v[19], v[20])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[23], v[24] = min(v[23], v[24]), max(v[23], v[24])
    v[25], v[26] = min(v[25], v[26]), max(v[25], v[26])
    v[27], v[28] = min(v[27], v[28]), max(v[27], v[28])
    v[29], v[30] = min(v[29], v[30]), max(v[29], v[30])
    v[33], v[34] = min(v[33], v[34]), max(v[33], v[34])
    v[35], v[36] = min(v[35], v[36]), max(v[35], v[36])
    v[37], v[38] = min(v[37], v[38]), max(v[37], v[38])
    v[39], v[40] = min(v[39], v[40]), max(v[39], v[40])
    v[41], v[42] = min(v[41], v[42]), max(v[41], v[42])
    v[43], v[44] = min(v[43], v[44]), max(v[43], v[44])
    v[45], v[46] = min(v[45], v[46]), max(v[45], v[46])
    v[0], v[16] = min(v[0], v[16]), max(v[0], v[16])
    v[1], v[17] = min(v[1], v[17]), max(v[1], v[17])
    v[2], v[18] = min(v[2], v[18]), max(v[2], v[18])
    v[3], v[19] = min(v[3], v[19]), max(v[3], v[19])
    v[4], v[20] = min(v[4], v[20]), max(v[4], v[20])
    v[5], v[21] = min(v[5], v[21]), max(v[5], v[21])
    v[6], v[22] = min(v[6], v[22]), max(v[6], v[22])
    v[7], v[23] = min(v[7], v[23]), max(v[7], v[23])
    v[8], v[24] = min(v[8], v[24]), max(v[8], v[24])
    v[9], v[25] = min(v[9], v[25]), max(v[9], v[25])
    v[10], v[26] = min(v[10], v[26]), max(v[10], v[26])
    v[11], v[27] = min(v[11], v[27]), max(v[11], v[27])
    v[12], v[28] = min(v[12], v[28]), max(v[12], v[28])
    v[13], v[29] = min(v[13], v[29]), max(v[13], v[29])
    v[14], v[30] = min(v[14], v[30]), max(v[14], v[30])
    v[15], v[31] = min(v[15], v[31]), max(v[15], v[31])
    v[32], v[48] = min(v[32], v[48]), max(v[32], v[48])
    v[8], v[16] = min(v[8], v[16]), max(v[8], v[16])
    v[9], v[17] = min(v[9], v[17]), max(v[9], v[17])
    v[10], v[18] = min(v[10], v[18]), max(v[10], v[18])
    v[11], v[19] = min(v[11], v[19]), max(v[11], v[19])
    v[12], v[20] = min(v[12], v[20]), max(v[12], v[20])
    v[13], v[21] = min(v[13], v[21]), max(v[13], v[21])
    v[14], v[22] = min(v[14], v[22]), max(v[14], v[22])
    v[15], v[23] = min(v[15], v[23]), max(v[15], v[23])
    v[40], v[48] = min(v[40], v[48]), max(v[40], v[48])
    v[4], v[8] = min(v[4], v[8]), max(v[4], v[8])
    v[5], v[9] = min(v[5], v[9]), max(v[5], v[9])
    v[6], v[10] = min(v[6], v[10]), max(v[6], v[10])
    v[7], v[11] = min(v[7], v[11]), max(v[7], v[11])
    v[12], v[16] = min(v[12], v[16]), max(v[12], v[16])
    v[13], v[17] = min(v[13], v[17]), max(v[13], v[17])
    v[14], v[18] = min(v[14], v[18]), max(v[14], v[18])
    v[15], v[19] = min(v[15], v[19]), max(v[15], v[19])
    v[20], v[24] = min(v[20], v[24]), max(v[20], v[24])
    v[21], v[25] = min(v[21], v[25]), max(v[21], v[25])
    v[22], v[26] = min(v[22], v[26]), max(v[22], v[26])
    v[23], v[27] = min(v[23], v[27]), max(v[23], v[27])
    v[36], v[40] = min(v[36], v[40]), max(v[36], v[40])
    v[37], v[41] = min(v[37], v[41]), max(v[37], v[41])
    v[38], v[42] = min(v[38], v[42]), max(v[38], v[42])
    v[39], v[43] = min(v[39], v[43]), max(v[39], v[43])
    v[44], v[48] = min(v[44], v[48]), max(v[44], v[48])
    v[2], v[4] = min(v[2], v[4]), max(v[2], v[4])
    v[3], v[5] = min(v[3], v[5]), max(v[3], v[5])
    v[6], v[8] = min(v[6], v[8]), max(v[6], v[8])
    v[7], v[9] = min(v[7], v[9]), max(v[7], v[9])
    v[10], v[12] = min(v[10], v[12]), max(v[10], v[12])
    v[11], v[13] = min(v[11], v[13]), max(v[11], v[13])
    v[14], v[16] = min(v[14], v[16]), max(v[14], v[16])
    v[15], v[17] = min(v[15], v[17]), max(v[15], v[17])
    v[18], v[20] = min(v[18], v[20]), max(v[18], v[20])
    v[19], v[21] = min(v[19], v[21]), max(v[19], v[21])
    v[22], v[24] = min(v[22], v[24]), max(v[22], v[24])
    v[23], v[25] = min(v[23], v[25]), max(v[23], v[25])
    v[26], v[28] = min(v[26], v[28]), max(v[26], v[28])
    v[27], v[29] = min(v[27], v[29]), max(v[27], v[29])
    v[34], v[36] = min(v[34], v[36]), max(v[34], v[36])
    v[35], v[37] = min(v[35], v[37]), max(v[35], v[37])
    v[38], v[40] = min(v[38], v[40]), max(v[38], v[40])
    v[39], v[41] = min(v[39], v[41]), max(v[39], v[41])
    v[42], v[44] = min(v[42], v[44]), max(v[42], v[44])
    v[43], v[45] = min(v[43], v[45]), max(v[43], v[45])
    v[46], v[48] = min(v[46], v[48]), max(v[46], v[48])
    v[1], v[2] = min(v[1], v[2]), max(v[1], v[2])
    v[3], v[4] = min(v[3], v[4]), max(v[3], v[4])
    v[5], v[6] = min(v[5], v[6]), max(v[5], v[6])
    v[7], v[8] = min(v[7], v[8]), max(v[7], v[8])
    v[9], v[10] = min(v[9], v[10]), max(v[9], v[10])
    v[11], v[12] = min(v[11], v[12]), max(v[11], v[12])
    v[13], v[14] = min(v[13], v[14]), max(v[13], v[14])
    v[15], v[16] = min(v[15], v[16]), max(v[15], v[16])
    v[17], v[18] = min(v[17], v[18]), max(v[17], v[18])
    v[19], v[20] = min(v[19], v[20]), max(v[19], v[20])
    v[21], v[22] = min(v[21], v[22]), max(v[21], v[22])
    v[23], v[24] = min(v[23], v[24]), max(v[23], v[24])
    v[25], v[26] = min(v[25], v[26]), max(v[25], v[26])
    v[27], v[28] = min(v[27], v[28]), max(v[27], v[28])
    v[33], v[34] = min(v[33], v[34]), max(v[33], v[34])
    v[35], v[36] = min(v[35], v[36]), max(v[35], v[36])
    v[37], v[38] = min(v[37], v[38]), max(v[37], v[38])
    v[39], v[40] = min(v[39], v[40]), max(v[39], v[40])
    v[41], v[42] = min(v[41], v[42]), max(v[41], v[42])
    v[43], v[44] = min(v[43], v[44]), max(v[43], v[44])
    v[45], v[46] = min(v[45], v[46]), max(v[45], v[46])
    v[47], v[48] = min(v[47], v[48]), max(v[47], v[48])
    v[0], v[32] = min(v[0], v[32]), max(v[0], v[32])
    v[1], v[33] = min(v[1], v[33]), max(v[1], v[33])
    v[2], v[34] = min(v[2], v[34]), max(v[2], v[34])
    v[3], v[35] = min(v[3], v[35]), max(v[3], v[35])
    v[4], v[36] = min(v[4], v[36]), max(v[4], v[36])
    v[5], v[37] = min(v[5], v[37]), max(v[5], v[37])
    v[6], v[38] = min(v[6], v[38]), max(v[6], v[38])
    v[7], v[39] = min(v[7], v[39]), max(v[7], v[39])
    v[8], v[40] = min(v[8], v[40]), max(v[8], v[40])
    v[9], v[41] = min(v[9], v[41]), max(v[9], v[41])
    v[10], v[42] = min(v[10], v[42]), max(v[10], v[42])
    v[11], v[43] = min(v[11], v[43]), max(v[11], v[43])
    v[12], v[44] = min(v[12], v[44]), max(v[12], v[44])
    v[13], v[45] = min(v[13], v[45]), max(v[13], v[45])
    v[14], v[46] = min(v[14], v[46]), max(v[14], v[46])
    v[15], v[47] = min(v[15], v[47]), max(v[15], v[47])
    v[16], v[48] = min(v[16], v[48]), max(v[16], v[48])
    v[16], v[32] = min(v[16], v[32]), max(v[16], v[32])
    v[17], v[33] = min(v[17], v[33]), max(v[17], v[33])
    v[18], v[34] = min(v[18], v[34]), max(v[18], v[34])
    v[19], v[35] = min(v[19], v[35]), max(v[19], v[35])
    v[20], v[36] = min(v[20], v[36]), max(v[20], v[36])
    v[21], v[37] = min(v[21], v[37]), max(v[21], v[37])
    v[22], v[38] = min(v[22], v[38]), max(v[22], v[38])
    v[23], v[39] = min(v[23], v[39]), max(v[23], v[39])
    v[24], v[40] = min(v[24], v[40]), max(v[24], v[40])
    v[25], v[41] = min(v[25], v[41]), max(v[25], v[41])
    v[26], v[42] = min(v[26], v[42]), max(v[26], v[42])
    v[27], v[43] = min(v[27], v[43]), max(v[27], v[43])
    v[12], v[20] = min(v[12], v[20]), max(v[12], v[20])
    v[13], v[21] = min(v[13], v[21]), max(v[13], v[21])
    v[14], v[22] = min(v[14], v[22]), max(v[14], v[22])
    v[15], v[23] = min(v[15], v[23]), max(v[15], v[23])
    v[24], v[32] = min(v[24], v[32]), max(v[24], v[32])
    v[25], v[33] = min(v[25], v[33]), max(v[25], v[33])
    v[26], v[34] = min(v[26], v[34]), max(v[26], v[34])
    v[27], v[35] = min(v[27], v[35]), max(v[27], v[35])
    v[20], v[24] = min(v[20], v[24]), max(v[20], v[24])
    v[21], v[25] = min(v[21], v[25]), max(v[21], v[25])
    v[22], v[26] = min(v[22], v[26]), max(v[22], v[26])
    v[23], v[27] = min(v[23], v[27]), max(v[23], v[27])
    v[22], v[24] = min(v[22], v[24]), max(v[22], v[24])
    v[23], v[25] = min(v[23], v[25]), max(v[23], v[25])
    v[23], v[24] = min(v[23], v[24]), max(v[23], v[24])
    return v[24]
