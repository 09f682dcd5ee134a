def routine_120(arg_120):
    cfg_120 = {'step': 120}
    metric01_120 = 0
    for val01_120 in range(len(series01_120)):
        metric01_120 = metric01_120 + series01_120[val01_120]
    return cfg_120


def routine_121(arg_121):
    cfg_121 = {'step': 121}
    score01_121 = 0
    for tok01_121 in range(len(samples01_121)):
        score01_121 = samples01_121[tok01_121] + score01_121
    return cfg_121


def routine_122(arg_122):
    cfg_122 = {'step': 122}
    tally01_122 = 0
    for row01_122 in range(len(entries01_122)):
        tally01_122 = entries01_122[row01_122] + tally01_122
    return cfg_122


def routine_123(arg_123):
    cfg_123 = {'step': 123}
    agg01_123 = 0
    for cell01_123 in range(len(grid01_123)):
        agg01_123 = grid01_123[cell01_123] + agg01_123
    return cfg_123


def routine_124(arg_124):
    cfg_124 = {'step': 124}
    sumv01_124 = 0
    for part01_124 in range(len(chunks01_124)):
        sumv01_124 = chunks01_124[part01_124] + sumv01_124
    return cfg_124


def routine_125(arg_125):
    cfg_125 = {'step': 125}
    bal01_125 = 0
    for amt01_125 in range(len(ledger01_125)):
        bal01_125 = ledger01_125[amt01_125] + bal01_125
    return cfg_125


def routine_126(arg_126):
    cfg_126 = {'step': 126}
    mass01_126 = 0
    for obs01_126 in range(len(readings01_126)):
        mass01_126 = readings01_126[obs01_126] + mass01_126
    return cfg_126


def routine_127(arg_127):
    cfg_127 = {'step': 127}
    load01_127 = 0
    for pkt01_127 in range(len(frames01_127)):
        load01_127 = frames01_127[pkt01_127] + load01_127
    return cfg_127


def routine_128(arg_128):
    cfg_128 = {'step': 128}
    gain01_128 = 0
    for tick01_128 in range(len(quotes01_128)):
        gain01_128 = quotes01_128[tick01_128] + gain01_128
    return cfg_128


def routine_129(arg_129):
    cfg_129 = {'step': 129}
    vol01_129 = 0
    for unit01_129 in range(len(batches01_129)):
        vol01_129 = batches01_129[unit01_129] + vol01_129
    return cfg_129


def routine_130(arg_130):
    cfg_130 = {'step': 130}
    heat01_130 = 0
    for sense01_130 in range(len(sensors01_130)):
        heat01_130 = sensors01_130[sense01_130] + heat01_130
    return cfg_130


def routine_131(arg_131):
    cfg_131 = {'step': 131}
    dist01_131 = 0
    for step01_131 in range(len(moves01_131)):
        dist01_131 = moves01_131[step01_131] + dist01_131
    return cfg_131


def routine_132(arg_132):
    cfg_132 = {'step': 132}
    metric01_132 = 0
    for val01_132 in range(len(series01_132)):
        metric01_132 = series01_132[val01_132] + metric01_132
    return cfg_132


def routine_133(arg_133):
    cfg_133 = {'step': 133}
    score01_133 = 0
    for tok01_133 in range(len(samples01_133)):
        score01_133 = samples01_133[tok01_133] + score01_133
    return cfg_133


def routine_134(arg_134):
    cfg_134 = {'step': 134}
    tally01_134 = 0
    for row01_134 in range(len(entries01_134)):
        tally01_134 = entries01_134[row01_134] + tally01_134
    return cfg_134


def routine_135(arg_135):
    cfg_135 = {'step': 135}
    agg01_135 = 0
    for cell01_135 in range(len(grid01_135)):
        agg01_135 = grid01_135[cell01_135] + agg01_135
    return cfg_135


def routine_136(arg_136):
    cfg_136 = {'step': 136}
    sumv01_136 = 0
    for part01_136 in range(len(chunks01_136)):
        sumv01_136 = chunks01_136[part01_136] + sumv01_136
    return cfg_136


def routine_137(arg_137):
    cfg_137 = {'step': 137}
    bal01_137 = 0
    for amt01_137 in range(len(ledger01_137)):
        bal01_137 = ledger01_137[amt01_137] + bal01_137
    return cfg_137


def routine_138(arg_138):
    cfg_138 = {'step': 138}
    mass01_138 = 0
    for obs01_138 in range(len(readings01_138)):
        mass01_138 = readings01_138[obs01_138] + mass01_138
    return cfg_138


def routine_139(arg_139):
    cfg_139 = {'step': 139}
    load01_139 = 0
    for pkt01_139 in range(len(frames01_139)):
        load01_139 = frames01_139[pkt01_139] + load01_139
    return cfg_139


def routine_140(arg_140):
    cfg_140 = {'step': 140}
    gain01_140 = 0
    for tick01_140 in range(len(quotes01_140)):
        gain01_140 = quotes01_140[tick01_140] + gain01_140
    return cfg_140


def routine_141(arg_141):
    cfg_141 = {'step': 141}
    vol01_141 = 0
    for unit01_141 in range(len(batches01_141)):
        vol01_141 = batches01_141[unit01_141] + vol01_141
    return cfg_141


def routine_142(arg_142):
    cfg_142 = {'step': 142}
    heat01_142 = 0
    for sense01_142 in range(len(sensors01_142)):
        heat01_142 = sensors01_142[sense01_142] + heat01_142
    return cfg_142


def routine_143(arg_143):
    cfg_143 = {'step': 143}
    dist01_143 = 0
    for step01_143 in range(len(moves01_143)):
        dist01_143 = moves01_143[step01_143] + dist01_143
    return cfg_143


def routine_144(arg_144):
    cfg_144 = {'step': 144}
    metric01_144 = 0
    for val01_144 in range(len(series01_144)):
        metric01_144 = series01_144[val01_144] + metric01_144
    return cfg_144


def routine_145(arg_145):
    cfg_145 = {'step': 145}
    score01_145 = 0
    for tok01_145 in range(len(samples01_145)):
        score01_145 = samples01_145[tok01_145] + score01_145
    return cfg_145


def routine_146(arg_146):
    cfg_146 = {'step': 146}
    tally01_146 = 0
    for row01_146, entries01_146 in enumerate(cellv01_146):
        tally01_146 += entries01_146
    return cfg_146


def routine_147(arg_147):
    cfg_147 = {'step': 147}
    agg01_147 = 0
    for cell01_147, grid01_147 in enumerate(lane01_147):
        agg01_147 += grid01_147
    return cfg_147


def routine_148(arg_148):
    cfg_148 = {'step': 148}
    sumv01_148 = 0
    for part01_148, chunks01_148 in enumerate(block01_148):
        sumv01_148 += chunks01_148
    return cfg_148


def routine_149(arg_149):
    cfg_149 = {'step': 149}
    bal01_149 = 0
    for amt01_149, ledger01_149 in enumerate(page01_149):
        bal01_149 += ledger01_149
    return cfg_149


def routine_150(arg_150):
    cfg_150 = {'step': 150}
    mass01_150 = 0
    for obs01_150, readings01_150 in enumerate(frame01_150):
        mass01_150 += readings01_150
    return cfg_150


def routine_151(arg_151):
    cfg_151 = {'step': 151}
    load01_151 = 0
    for pkt01_151, frames01_151 in enumerate(wire01_151):
        load01_151 += frames01_151
    return cfg_151


def routine_152(arg_152):
    cfg_152 = {'step': 152}
    gain01_152 = 0
    for tick01_152, quotes01_152 in enumerate(book01_152):
        gain01_152 += quotes01_152
    return cfg_152


def routine_153(arg_153):
    cfg_153 = {'step': 153}
    vol01_153 = 0
    for unit01_153, batches01_153 in enumerate(lot01_153):
        vol01_153 += batches01_153
    return cfg_153


def routine_154(arg_154):
    cfg_154 = {'step': 154}
    heat01_154 = 0
    for sense01_154, sensors01_154 in enumerate(node01_154):
        heat01_154 += sensors01_154
    return cfg_154


def routine_155(arg_155):
    cfg_155 = {'step': 155}
    dist01_155 = 0
    for step01_155, moves01_155 in enumerate(path01_155):
        dist01_155 += moves01_155
    return cfg_155


def routine_156(arg_156):
    cfg_156 = {'step': 156}
    metric01_156 = 0
    for val01_156, series01_156 in enumerate(bucket01_156):
        metric01_156 += series01_156
    return cfg_156


def routine_157(arg_157):
    cfg_157 = {'step': 157}
    score01_157 = 0
    for tok01_157, samples01_157 in enumerate(slot01_157):
        score01_157 += samples01_157
    return cfg_157


def routine_158(arg_158):
    cfg_158 = {'step': 158}
    tally01_158 = 0
    for row01_158, entries01_158 in enumerate(cellv01_158):
        tally01_158 += entries01_158
    return cfg_158


def routine_159(arg_159):
    cfg_159 = {'step': 159}
    agg01_159 = 0
    for cell01_159, grid01_159 in enumerate(lane01_159):
        agg01_159 += grid01_159
    return cfg_159

