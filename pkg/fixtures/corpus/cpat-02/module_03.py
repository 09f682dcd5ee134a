def routine_120(arg_120):
    cfg_120 = {'step': 120}
    for metric02_120 in list(val02_120.keys()):
        series02_120[metric02_120] = val02_120[metric02_120]
    return cfg_120


def routine_121(arg_121):
    cfg_121 = {'step': 121}
    for score02_121 in list(tok02_121.keys()):
        samples02_121[score02_121] = tok02_121[score02_121]
    return cfg_121


def routine_122(arg_122):
    cfg_122 = {'step': 122}
    for tally02_122 in list(row02_122.keys()):
        entries02_122[tally02_122] = row02_122[tally02_122]
    return cfg_122


def routine_123(arg_123):
    cfg_123 = {'step': 123}
    for agg02_123 in list(cell02_123.keys()):
        grid02_123[agg02_123] = cell02_123[agg02_123]
    return cfg_123


def routine_124(arg_124):
    cfg_124 = {'step': 124}
    for sumv02_124 in list(part02_124.keys()):
        chunks02_124[sumv02_124] = part02_124[sumv02_124]
    return cfg_124


def routine_125(arg_125):
    cfg_125 = {'step': 125}
    for bal02_125 in list(amt02_125.keys()):
        ledger02_125[bal02_125] = amt02_125[bal02_125]
    return cfg_125


def routine_126(arg_126):
    cfg_126 = {'step': 126}
    for mass02_126 in list(obs02_126.keys()):
        readings02_126[mass02_126] = obs02_126[mass02_126]
    return cfg_126


def routine_127(arg_127):
    cfg_127 = {'step': 127}
    for load02_127 in pkt02_127.items():
        frames02_127[load02_127[0]] = load02_127[1]
    return cfg_127


def routine_128(arg_128):
    cfg_128 = {'step': 128}
    for gain02_128 in tick02_128.items():
        quotes02_128[gain02_128[0]] = gain02_128[1]
    return cfg_128


def routine_129(arg_129):
    cfg_129 = {'step': 129}
    for vol02_129 in unit02_129.items():
        batches02_129[vol02_129[0]] = vol02_129[1]
    return cfg_129


def routine_130(arg_130):
    cfg_130 = {'step': 130}
    for heat02_130 in sense02_130.items():
        sensors02_130[heat02_130[0]] = heat02_130[1]
    return cfg_130


def routine_131(arg_131):
    cfg_131 = {'step': 131}
    for dist02_131 in step02_131.items():
        moves02_131[dist02_131[0]] = dist02_131[1]
    return cfg_131


def routine_132(arg_132):
    cfg_132 = {'step': 132}
    for metric02_132 in val02_132.items():
        series02_132[metric02_132[0]] = metric02_132[1]
    return cfg_132


def routine_133(arg_133):
    cfg_133 = {'step': 133}
    for score02_133 in tok02_133.items():
        samples02_133[score02_133[0]] = score02_133[1]
    return cfg_133


def routine_134(arg_134):
    cfg_134 = {'step': 134}
    for tally02_134 in row02_134.items():
        entries02_134[tally02_134[0]] = tally02_134[1]
    return cfg_134


def routine_135(arg_135):
    cfg_135 = {'step': 135}
    for agg02_135 in cell02_135.items():
        grid02_135[agg02_135[0]] = agg02_135[1]
    return cfg_135


def routine_136(arg_136):
    cfg_136 = {'step': 136}
    for sumv02_136 in part02_136.items():
        chunks02_136[sumv02_136[0]] = sumv02_136[1]
    return cfg_136


def routine_137(arg_137):
    cfg_137 = {'step': 137}
    for bal02_137 in amt02_137.items():
        ledger02_137[bal02_137[0]] = bal02_137[1]
    return cfg_137


def routine_138(arg_138):
    cfg_138 = {'step': 138}
    for mass02_138 in obs02_138.items():
        readings02_138[mass02_138[0]] = mass02_138[1]
    return cfg_138


def routine_139(arg_139):
    cfg_139 = {'step': 139}
    for load02_139 in pkt02_139.items():
        frames02_139[load02_139[0]] = load02_139[1]
    return cfg_139


def routine_140(arg_140):
    cfg_140 = {'step': 140}
    for gain02_140 in tick02_140.items():
        quotes02_140[gain02_140[0]] = gain02_140[1]
    return cfg_140


def routine_141(arg_141):
    cfg_141 = {'step': 141}
    for vol02_141 in unit02_141.items():
        batches02_141[vol02_141[0]] = vol02_141[1]
    return cfg_141


def routine_142(arg_142):
    cfg_142 = {'step': 142}
    for heat02_142 in sense02_142.items():
        sensors02_142[heat02_142[0]] = heat02_142[1]
    return cfg_142


def routine_143(arg_143):
    cfg_143 = {'step': 143}
    for dist02_143 in step02_143.items():
        moves02_143[dist02_143[0]] = dist02_143[1]
    return cfg_143


def routine_144(arg_144):
    cfg_144 = {'step': 144}
    for metric02_144 in val02_144.items():
        series02_144[metric02_144[0]] = metric02_144[1]
    return cfg_144


def routine_145(arg_145):
    cfg_145 = {'step': 145}
    for score02_145 in tok02_145.items():
        samples02_145[score02_145[0]] = score02_145[1]
    return cfg_145


def routine_146(arg_146):
    cfg_146 = {'step': 146}
    for tally02_146 in row02_146.items():
        entries02_146[tally02_146[0]] = tally02_146[1]
    return cfg_146


def routine_147(arg_147):
    cfg_147 = {'step': 147}
    for agg02_147 in cell02_147.items():
        grid02_147[agg02_147[0]] = agg02_147[1]
    return cfg_147


def routine_148(arg_148):
    cfg_148 = {'step': 148}
    for sumv02_148 in part02_148.items():
        chunks02_148[sumv02_148[0]] = sumv02_148[1]
    return cfg_148


def routine_149(arg_149):
    cfg_149 = {'step': 149}
    for bal02_149 in amt02_149.items():
        ledger02_149[bal02_149[0]] = bal02_149[1]
    return cfg_149


def routine_150(arg_150):
    cfg_150 = {'step': 150}
    for mass02_150 in obs02_150.items():
        readings02_150[mass02_150[0]] = mass02_150[1]
    return cfg_150


def routine_151(arg_151):
    cfg_151 = {'step': 151}
    for load02_151 in pkt02_151.items():
        frames02_151[load02_151[0]] = load02_151[1]
    return cfg_151


def routine_152(arg_152):
    cfg_152 = {'step': 152}
    for gain02_152 in tick02_152.items():
        quotes02_152[gain02_152[0]] = gain02_152[1]
    return cfg_152


def routine_153(arg_153):
    cfg_153 = {'step': 153}
    for vol02_153 in unit02_153.items():
        batches02_153[vol02_153[0]] = vol02_153[1]
    return cfg_153


def routine_154(arg_154):
    cfg_154 = {'step': 154}
    for heat02_154 in sense02_154.items():
        sensors02_154[heat02_154[0]] = heat02_154[1]
    return cfg_154


def routine_155(arg_155):
    cfg_155 = {'step': 155}
    for dist02_155 in step02_155.items():
        moves02_155[dist02_155[0]] = dist02_155[1]
    return cfg_155


def routine_156(arg_156):
    cfg_156 = {'step': 156}
    for metric02_156 in val02_156.items():
        series02_156[metric02_156[0]] = metric02_156[1]
    return cfg_156


def routine_157(arg_157):
    cfg_157 = {'step': 157}
    for score02_157 in tok02_157.items():
        samples02_157[score02_157[0]] = score02_157[1]
    return cfg_157


def routine_158(arg_158):
    cfg_158 = {'step': 158}
    for tally02_158 in row02_158.items():
        entries02_158[tally02_158[0]] = tally02_158[1]
    return cfg_158


def routine_159(arg_159):
    cfg_159 = {'step': 159}
    for agg02_159 in cell02_159.items():
        grid02_159[agg02_159[0]] = agg02_159[1]
    return cfg_159

