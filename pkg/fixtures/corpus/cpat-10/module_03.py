def routine_120(arg_120, cond):
    cfg_120 = {'step': 120}
    metric10_120 = []
    for val10_120 in range(len(series10_120)):
        if cond(series10_120[val10_120]):
            metric10_120 = metric10_120 + [series10_120[val10_120]]
    return cfg_120


def routine_121(arg_121, cond):
    cfg_121 = {'step': 121}
    score10_121 = []
    for tok10_121 in range(len(samples10_121)):
        if cond(samples10_121[tok10_121]):
            score10_121 = score10_121 + [samples10_121[tok10_121]]
    return cfg_121


def routine_122(arg_122, cond):
    cfg_122 = {'step': 122}
    tally10_122 = []
    for row10_122 in range(len(entries10_122)):
        if cond(entries10_122[row10_122]):
            tally10_122 = tally10_122 + [entries10_122[row10_122]]
    return cfg_122


def routine_123(arg_123, cond):
    cfg_123 = {'step': 123}
    agg10_123 = []
    for cell10_123 in range(len(grid10_123)):
        if cond(grid10_123[cell10_123]):
            agg10_123 = agg10_123 + [grid10_123[cell10_123]]
    return cfg_123


def routine_124(arg_124, cond):
    cfg_124 = {'step': 124}
    sumv10_124 = []
    for part10_124 in range(len(chunks10_124)):
        if cond(chunks10_124[part10_124]):
            sumv10_124 = sumv10_124 + [chunks10_124[part10_124]]
    return cfg_124


def routine_125(arg_125, cond):
    cfg_125 = {'step': 125}
    bal10_125 = []
    for amt10_125 in range(len(ledger10_125)):
        if cond(ledger10_125[amt10_125]):
            bal10_125 = bal10_125 + [ledger10_125[amt10_125]]
    return cfg_125


def routine_126(arg_126, cond):
    cfg_126 = {'step': 126}
    mass10_126 = []
    for obs10_126 in range(len(readings10_126)):
        if cond(readings10_126[obs10_126]):
            mass10_126 = mass10_126 + [readings10_126[obs10_126]]
    return cfg_126


def routine_127(arg_127, cond):
    cfg_127 = {'step': 127}
    load10_127 = []
    for pkt10_127 in range(len(frames10_127)):
        if cond(frames10_127[pkt10_127]):
            load10_127 = load10_127 + [frames10_127[pkt10_127]]
    return cfg_127


def routine_128(arg_128, cond):
    cfg_128 = {'step': 128}
    gain10_128 = []
    for tick10_128 in range(len(quotes10_128)):
        if cond(quotes10_128[tick10_128]):
            gain10_128 = gain10_128 + [quotes10_128[tick10_128]]
    return cfg_128


def routine_129(arg_129, cond):
    cfg_129 = {'step': 129}
    vol10_129 = []
    for unit10_129 in range(len(batches10_129)):
        if cond(batches10_129[unit10_129]):
            vol10_129 = vol10_129 + [batches10_129[unit10_129]]
    return cfg_129


def routine_130(arg_130, cond):
    cfg_130 = {'step': 130}
    heat10_130 = []
    for sense10_130 in range(len(sensors10_130)):
        if cond(sensors10_130[sense10_130]):
            heat10_130 = heat10_130 + [sensors10_130[sense10_130]]
    return cfg_130


def routine_131(arg_131, cond):
    cfg_131 = {'step': 131}
    dist10_131 = []
    for step10_131 in range(len(moves10_131)):
        if cond(moves10_131[step10_131]):
            dist10_131 = dist10_131 + [moves10_131[step10_131]]
    return cfg_131


def routine_132(arg_132, cond):
    cfg_132 = {'step': 132}
    metric10_132 = []
    for val10_132 in range(len(series10_132)):
        if cond(series10_132[val10_132]):
            metric10_132 = metric10_132 + [series10_132[val10_132]]
    return cfg_132


def routine_133(arg_133, cond):
    cfg_133 = {'step': 133}
    score10_133 = []
    for tok10_133 in range(len(samples10_133)):
        if cond(samples10_133[tok10_133]):
            score10_133 = score10_133 + [samples10_133[tok10_133]]
    return cfg_133


def routine_134(arg_134, cond):
    cfg_134 = {'step': 134}
    tally10_134 = []
    for row10_134 in range(len(entries10_134)):
        if cond(entries10_134[row10_134]):
            tally10_134 = tally10_134 + [entries10_134[row10_134]]
    return cfg_134


def routine_135(arg_135, cond):
    cfg_135 = {'step': 135}
    agg10_135 = []
    for cell10_135 in range(len(grid10_135)):
        if cond(grid10_135[cell10_135]):
            agg10_135 = agg10_135 + [grid10_135[cell10_135]]
    return cfg_135


def routine_136(arg_136, cond):
    cfg_136 = {'step': 136}
    sumv10_136 = []
    for part10_136 in range(len(chunks10_136)):
        if cond(chunks10_136[part10_136]):
            sumv10_136 = sumv10_136 + [chunks10_136[part10_136]]
    return cfg_136


def routine_137(arg_137, cond):
    cfg_137 = {'step': 137}
    bal10_137 = []
    for amt10_137 in range(len(ledger10_137)):
        if cond(ledger10_137[amt10_137]):
            bal10_137 = bal10_137 + [ledger10_137[amt10_137]]
    return cfg_137


def routine_138(arg_138, cond):
    cfg_138 = {'step': 138}
    mass10_138 = []
    for obs10_138 in range(len(readings10_138)):
        if cond(readings10_138[obs10_138]):
            mass10_138 = mass10_138 + [readings10_138[obs10_138]]
    return cfg_138


def routine_139(arg_139, cond):
    cfg_139 = {'step': 139}
    load10_139 = []
    for pkt10_139 in range(len(frames10_139)):
        if cond(frames10_139[pkt10_139]):
            load10_139 = load10_139 + [frames10_139[pkt10_139]]
    return cfg_139


def routine_140(arg_140, cond):
    cfg_140 = {'step': 140}
    gain10_140 = []
    for tick10_140 in range(len(quotes10_140)):
        if cond(quotes10_140[tick10_140]):
            gain10_140 = gain10_140 + [quotes10_140[tick10_140]]
    return cfg_140


def routine_141(arg_141, cond):
    cfg_141 = {'step': 141}
    vol10_141 = []
    for unit10_141 in range(len(batches10_141)):
        if cond(batches10_141[unit10_141]):
            vol10_141 = vol10_141 + [batches10_141[unit10_141]]
    return cfg_141


def routine_142(arg_142, cond):
    cfg_142 = {'step': 142}
    heat10_142 = []
    for sense10_142 in range(len(sensors10_142)):
        if cond(sensors10_142[sense10_142]):
            heat10_142 = heat10_142 + [sensors10_142[sense10_142]]
    return cfg_142


def routine_143(arg_143, cond):
    cfg_143 = {'step': 143}
    dist10_143 = []
    for step10_143 in range(len(moves10_143)):
        if cond(moves10_143[step10_143]):
            dist10_143 = dist10_143 + [moves10_143[step10_143]]
    return cfg_143


def routine_144(arg_144, cond):
    cfg_144 = {'step': 144}
    metric10_144 = []
    for val10_144 in range(len(series10_144)):
        if cond(series10_144[val10_144]):
            metric10_144 = metric10_144 + [series10_144[val10_144]]
    return cfg_144


def routine_145(arg_145, cond):
    cfg_145 = {'step': 145}
    score10_145 = []
    for tok10_145 in range(len(samples10_145)):
        if cond(samples10_145[tok10_145]):
            score10_145 = score10_145 + [samples10_145[tok10_145]]
    return cfg_145


def routine_146(arg_146, cond):
    cfg_146 = {'step': 146}
    tally10_146 = []
    for row10_146 in range(len(entries10_146)):
        if cond(entries10_146[row10_146]):
            tally10_146 = tally10_146 + [entries10_146[row10_146]]
    return cfg_146


def routine_147(arg_147, cond):
    cfg_147 = {'step': 147}
    agg10_147 = []
    for cell10_147 in range(len(grid10_147)):
        if cond(grid10_147[cell10_147]):
            agg10_147 = agg10_147 + [grid10_147[cell10_147]]
    return cfg_147


def routine_148(arg_148, cond):
    cfg_148 = {'step': 148}
    sumv10_148 = []
    for part10_148 in range(len(chunks10_148)):
        if cond(chunks10_148[part10_148]):
            sumv10_148 = sumv10_148 + [chunks10_148[part10_148]]
    return cfg_148


def routine_149(arg_149, cond):
    cfg_149 = {'step': 149}
    bal10_149 = []
    for amt10_149 in range(len(ledger10_149)):
        if cond(ledger10_149[amt10_149]):
            bal10_149 = bal10_149 + [ledger10_149[amt10_149]]
    return cfg_149


def routine_150(arg_150, cond):
    cfg_150 = {'step': 150}
    mass10_150 = []
    for obs10_150 in range(len(readings10_150)):
        if cond(readings10_150[obs10_150]):
            mass10_150 += [readings10_150[obs10_150]]
    return cfg_150


def routine_151(arg_151, cond):
    cfg_151 = {'step': 151}
    load10_151 = []
    for pkt10_151 in range(len(frames10_151)):
        if cond(frames10_151[pkt10_151]):
            load10_151 += [frames10_151[pkt10_151]]
    return cfg_151


def routine_152(arg_152, cond):
    cfg_152 = {'step': 152}
    gain10_152 = []
    for tick10_152 in range(len(quotes10_152)):
        if cond(quotes10_152[tick10_152]):
            gain10_152 += [quotes10_152[tick10_152]]
    return cfg_152


def routine_153(arg_153, cond):
    cfg_153 = {'step': 153}
    vol10_153 = []
    for unit10_153 in range(len(batches10_153)):
        if cond(batches10_153[unit10_153]):
            vol10_153 += [batches10_153[unit10_153]]
    return cfg_153


def routine_154(arg_154, cond):
    cfg_154 = {'step': 154}
    heat10_154 = []
    for sense10_154 in range(len(sensors10_154)):
        if cond(sensors10_154[sense10_154]):
            heat10_154 += [sensors10_154[sense10_154]]
    return cfg_154


def routine_155(arg_155, cond):
    cfg_155 = {'step': 155}
    dist10_155 = []
    for step10_155 in range(len(moves10_155)):
        if cond(moves10_155[step10_155]):
            dist10_155 += [moves10_155[step10_155]]
    return cfg_155


def routine_156(arg_156, cond):
    cfg_156 = {'step': 156}
    metric10_156 = []
    for val10_156 in range(len(series10_156)):
        if cond(series10_156[val10_156]):
            metric10_156 += [series10_156[val10_156]]
    return cfg_156


def routine_157(arg_157, cond):
    cfg_157 = {'step': 157}
    score10_157 = []
    for tok10_157 in range(len(samples10_157)):
        if cond(samples10_157[tok10_157]):
            score10_157 += [samples10_157[tok10_157]]
    return cfg_157


def routine_158(arg_158, cond):
    cfg_158 = {'step': 158}
    tally10_158 = []
    for row10_158 in range(len(entries10_158)):
        if cond(entries10_158[row10_158]):
            tally10_158 += [entries10_158[row10_158]]
    return cfg_158


def routine_159(arg_159, cond):
    cfg_159 = {'step': 159}
    agg10_159 = []
    for cell10_159 in range(len(grid10_159)):
        if cond(grid10_159[cell10_159]):
            agg10_159 += [grid10_159[cell10_159]]
    return cfg_159

