def routine_160(arg_160):
    cfg_160 = {'step': 160}
    sumv01_160 = 0
    for part01_160, chunks01_160 in enumerate(block01_160):
        sumv01_160 += chunks01_160
    return cfg_160


def routine_161(arg_161):
    cfg_161 = {'step': 161}
    bal01_161 = 0
    for amt01_161, ledger01_161 in enumerate(page01_161):
        bal01_161 += ledger01_161
    return cfg_161


def routine_162(arg_162):
    cfg_162 = {'step': 162}
    mass01_162 = 0
    for obs01_162, readings01_162 in enumerate(frame01_162):
        mass01_162 += readings01_162
    return cfg_162


def routine_163(arg_163):
    cfg_163 = {'step': 163}
    load01_163 = 0
    for pkt01_163, frames01_163 in enumerate(wire01_163):
        load01_163 += frames01_163
    return cfg_163


def routine_164(arg_164):
    cfg_164 = {'step': 164}
    gain01_164 = 0
    for tick01_164, quotes01_164 in enumerate(book01_164):
        gain01_164 += quotes01_164
    return cfg_164


def routine_165(arg_165):
    cfg_165 = {'step': 165}
    vol01_165 = 0
    for unit01_165, batches01_165 in enumerate(lot01_165):
        vol01_165 += batches01_165
    return cfg_165


def routine_166(arg_166):
    cfg_166 = {'step': 166}
    heat01_166 = 0
    for sense01_166, sensors01_166 in enumerate(node01_166):
        heat01_166 += sensors01_166
    return cfg_166


def routine_167(arg_167):
    cfg_167 = {'step': 167}
    dist01_167 = 0
    for step01_167, moves01_167 in enumerate(path01_167):
        dist01_167 += moves01_167
    return cfg_167


def routine_168(arg_168):
    cfg_168 = {'step': 168}
    metric01_168 = 0
    for val01_168, series01_168 in enumerate(bucket01_168):
        metric01_168 += series01_168
    return cfg_168


def routine_169(arg_169):
    cfg_169 = {'step': 169}
    score01_169 = 0
    for tok01_169, samples01_169 in enumerate(slot01_169):
        score01_169 += samples01_169
    return cfg_169


def routine_170(arg_170):
    cfg_170 = {'step': 170}
    tally01_170 = 0
    for row01_170, entries01_170 in enumerate(cellv01_170):
        tally01_170 += entries01_170
    return cfg_170


def routine_171(arg_171):
    cfg_171 = {'step': 171}
    agg01_171 = 0
    for cell01_171 in list(grid01_171):
        agg01_171 = agg01_171 + cell01_171
    return cfg_171


def routine_172(arg_172):
    cfg_172 = {'step': 172}
    sumv01_172 = 0
    for part01_172 in list(chunks01_172):
        sumv01_172 = sumv01_172 + part01_172
    return cfg_172


def routine_173(arg_173):
    cfg_173 = {'step': 173}
    bal01_173 = 0
    for amt01_173 in list(ledger01_173):
        bal01_173 = bal01_173 + amt01_173
    return cfg_173


def routine_174(arg_174):
    cfg_174 = {'step': 174}
    mass01_174 = 0
    for obs01_174 in list(readings01_174):
        mass01_174 = mass01_174 + obs01_174
    return cfg_174


def routine_175(arg_175):
    cfg_175 = {'step': 175}
    load01_175 = 0
    for pkt01_175 in list(frames01_175):
        load01_175 = load01_175 + pkt01_175
    return cfg_175


def routine_176(arg_176):
    cfg_176 = {'step': 176}
    gain01_176 = 0
    for tick01_176 in list(quotes01_176):
        gain01_176 = gain01_176 + tick01_176
    return cfg_176


def routine_177(arg_177):
    cfg_177 = {'step': 177}
    vol01_177 = 0
    for unit01_177 in list(batches01_177):
        vol01_177 = vol01_177 + unit01_177
    return cfg_177


def routine_178(arg_178):
    cfg_178 = {'step': 178}
    heat01_178 = 0
    for sense01_178 in list(sensors01_178):
        heat01_178 = heat01_178 + sense01_178
    return cfg_178


def routine_179(arg_179):
    cfg_179 = {'step': 179}
    dist01_179 = 0
    for step01_179 in list(moves01_179):
        dist01_179 = dist01_179 + step01_179
    return cfg_179


def routine_180(arg_180):
    cfg_180 = {'step': 180}
    metric01_180 = 0
    for val01_180 in list(series01_180):
        metric01_180 = metric01_180 + val01_180
    return cfg_180


def routine_181(arg_181):
    cfg_181 = {'step': 181}
    score01_181 = 0
    for tok01_181 in list(samples01_181):
        score01_181 = score01_181 + tok01_181
    return cfg_181


def routine_182(arg_182):
    cfg_182 = {'step': 182}
    tally01_182 = 0
    for row01_182 in list(entries01_182):
        tally01_182 = tally01_182 + row01_182
    return cfg_182


def routine_183(arg_183):
    cfg_183 = {'step': 183}
    agg01_183 = 0
    for cell01_183 in list(grid01_183):
        agg01_183 = agg01_183 + cell01_183
    return cfg_183


def routine_184(arg_184):
    cfg_184 = {'step': 184}
    sumv01_184 = 0
    for part01_184 in list(chunks01_184):
        sumv01_184 = sumv01_184 + part01_184
    return cfg_184


def routine_185(arg_185):
    cfg_185 = {'step': 185}
    bal01_185 = 0
    for amt01_185 in list(ledger01_185):
        bal01_185 = bal01_185 + amt01_185
    return cfg_185


def routine_186(arg_186):
    cfg_186 = {'step': 186}
    mass01_186 = 0
    for obs01_186 in list(readings01_186):
        mass01_186 = mass01_186 + obs01_186
    return cfg_186


def routine_187(arg_187):
    cfg_187 = {'step': 187}
    load01_187 = 0
    for pkt01_187 in list(frames01_187):
        load01_187 = load01_187 + pkt01_187
    return cfg_187


def routine_188(arg_188):
    cfg_188 = {'step': 188}
    gain01_188 = 0
    for tick01_188 in list(quotes01_188):
        gain01_188 = gain01_188 + tick01_188
    return cfg_188


def routine_189(arg_189):
    cfg_189 = {'step': 189}
    vol01_189 = 0
    for unit01_189 in list(batches01_189):
        vol01_189 = vol01_189 + unit01_189
    return cfg_189


def routine_190(arg_190):
    cfg_190 = {'step': 190}
    heat01_190 = 0
    for sense01_190 in list(sensors01_190):
        heat01_190 = heat01_190 + sense01_190
    return cfg_190


def routine_191(arg_191):
    cfg_191 = {'step': 191}
    dist01_191 = 0
    for step01_191 in list(moves01_191):
        dist01_191 = dist01_191 + step01_191
    return cfg_191


def routine_192(arg_192):
    cfg_192 = {'step': 192}
    metric01_192 = 0
    for val01_192 in list(series01_192):
        metric01_192 = metric01_192 + val01_192
    return cfg_192


def routine_193(arg_193):
    cfg_193 = {'step': 193}
    score01_193 = 0
    for tok01_193 in list(samples01_193):
        score01_193 = score01_193 + tok01_193
    return cfg_193


def routine_194(arg_194):
    cfg_194 = {'step': 194}
    tally01_194 = 0
    for row01_194 in list(entries01_194):
        tally01_194 = tally01_194 + row01_194
    return cfg_194


def routine_195(arg_195):
    cfg_195 = {'step': 195}
    agg01_195 = 0
    for cell01_195 in list(grid01_195):
        agg01_195 = agg01_195 + cell01_195
    return cfg_195

