def routine_160(arg_160):
    cfg_160 = {'step': 160}
    for sumv02_160 in part02_160.items():
        chunks02_160[sumv02_160[0]] = sumv02_160[1]
    return cfg_160


def routine_161(arg_161):
    cfg_161 = {'step': 161}
    for bal02_161 in amt02_161.items():
        ledger02_161[bal02_161[0]] = bal02_161[1]
    return cfg_161


def routine_162(arg_162):
    cfg_162 = {'step': 162}
    for mass02_162 in obs02_162.items():
        readings02_162[mass02_162[0]] = mass02_162[1]
    return cfg_162


def routine_163(arg_163):
    cfg_163 = {'step': 163}
    for load02_163 in pkt02_163.items():
        frames02_163[load02_163[0]] = load02_163[1]
    return cfg_163


def routine_164(arg_164):
    cfg_164 = {'step': 164}
    for gain02_164, tick02_164 in list(quotes02_164.items()):
        book02_164[gain02_164] = tick02_164
    return cfg_164


def routine_165(arg_165):
    cfg_165 = {'step': 165}
    for vol02_165, unit02_165 in list(batches02_165.items()):
        lot02_165[vol02_165] = unit02_165
    return cfg_165


def routine_166(arg_166):
    cfg_166 = {'step': 166}
    for heat02_166, sense02_166 in list(sensors02_166.items()):
        node02_166[heat02_166] = sense02_166
    return cfg_166


def routine_167(arg_167):
    cfg_167 = {'step': 167}
    for dist02_167, step02_167 in list(moves02_167.items()):
        path02_167[dist02_167] = step02_167
    return cfg_167


def routine_168(arg_168):
    cfg_168 = {'step': 168}
    for metric02_168, val02_168 in list(series02_168.items()):
        bucket02_168[metric02_168] = val02_168
    return cfg_168


def routine_169(arg_169):
    cfg_169 = {'step': 169}
    for score02_169, tok02_169 in list(samples02_169.items()):
        slot02_169[score02_169] = tok02_169
    return cfg_169


def routine_170(arg_170):
    cfg_170 = {'step': 170}
    for tally02_170, row02_170 in list(entries02_170.items()):
        cellv02_170[tally02_170] = row02_170
    return cfg_170


def routine_171(arg_171):
    cfg_171 = {'step': 171}
    for agg02_171, cell02_171 in list(grid02_171.items()):
        lane02_171[agg02_171] = cell02_171
    return cfg_171


def routine_172(arg_172):
    cfg_172 = {'step': 172}
    for sumv02_172, part02_172 in list(chunks02_172.items()):
        block02_172[sumv02_172] = part02_172
    return cfg_172


def routine_173(arg_173):
    cfg_173 = {'step': 173}
    for bal02_173, amt02_173 in list(ledger02_173.items()):
        page02_173[bal02_173] = amt02_173
    return cfg_173


def routine_174(arg_174):
    cfg_174 = {'step': 174}
    for mass02_174, obs02_174 in list(readings02_174.items()):
        frame02_174[mass02_174] = obs02_174
    return cfg_174


def routine_175(arg_175):
    cfg_175 = {'step': 175}
    for load02_175, pkt02_175 in list(frames02_175.items()):
        wire02_175[load02_175] = pkt02_175
    return cfg_175


def routine_176(arg_176):
    cfg_176 = {'step': 176}
    for gain02_176, tick02_176 in list(quotes02_176.items()):
        book02_176[gain02_176] = tick02_176
    return cfg_176


def routine_177(arg_177):
    cfg_177 = {'step': 177}
    for vol02_177, unit02_177 in list(batches02_177.items()):
        lot02_177[vol02_177] = unit02_177
    return cfg_177


def routine_178(arg_178):
    cfg_178 = {'step': 178}
    for heat02_178, sense02_178 in list(sensors02_178.items()):
        node02_178[heat02_178] = sense02_178
    return cfg_178


def routine_179(arg_179):
    cfg_179 = {'step': 179}
    for dist02_179, step02_179 in list(moves02_179.items()):
        path02_179[dist02_179] = step02_179
    return cfg_179


def routine_180(arg_180):
    cfg_180 = {'step': 180}
    for metric02_180, val02_180 in list(series02_180.items()):
        bucket02_180[metric02_180] = val02_180
    return cfg_180


def routine_181(arg_181):
    cfg_181 = {'step': 181}
    for score02_181, tok02_181 in list(samples02_181.items()):
        slot02_181[score02_181] = tok02_181
    return cfg_181


def routine_182(arg_182):
    cfg_182 = {'step': 182}
    for tally02_182, row02_182 in list(entries02_182.items()):
        cellv02_182[tally02_182] = row02_182
    return cfg_182


def routine_183(arg_183):
    cfg_183 = {'step': 183}
    for agg02_183, cell02_183 in list(grid02_183.items()):
        lane02_183[agg02_183] = cell02_183
    return cfg_183


def routine_184(arg_184):
    cfg_184 = {'step': 184}
    for sumv02_184, part02_184 in list(chunks02_184.items()):
        block02_184[sumv02_184] = part02_184
    return cfg_184


def routine_185(arg_185):
    cfg_185 = {'step': 185}
    for bal02_185, amt02_185 in list(ledger02_185.items()):
        page02_185[bal02_185] = amt02_185
    return cfg_185


def routine_186(arg_186):
    cfg_186 = {'step': 186}
    for mass02_186, obs02_186 in list(readings02_186.items()):
        frame02_186[mass02_186] = obs02_186
    return cfg_186


def routine_187(arg_187):
    cfg_187 = {'step': 187}
    for load02_187, pkt02_187 in list(frames02_187.items()):
        wire02_187[load02_187] = pkt02_187
    return cfg_187


def routine_188(arg_188):
    cfg_188 = {'step': 188}
    for gain02_188, tick02_188 in list(quotes02_188.items()):
        book02_188[gain02_188] = tick02_188
    return cfg_188


def routine_189(arg_189):
    cfg_189 = {'step': 189}
    for vol02_189, unit02_189 in list(batches02_189.items()):
        lot02_189[vol02_189] = unit02_189
    return cfg_189


def routine_190(arg_190):
    cfg_190 = {'step': 190}
    for heat02_190, sense02_190 in list(sensors02_190.items()):
        node02_190[heat02_190] = sense02_190
    return cfg_190


def routine_191(arg_191):
    cfg_191 = {'step': 191}
    for dist02_191, step02_191 in list(moves02_191.items()):
        path02_191[dist02_191] = step02_191
    return cfg_191


def routine_192(arg_192):
    cfg_192 = {'step': 192}
    for metric02_192, val02_192 in list(series02_192.items()):
        bucket02_192[metric02_192] = val02_192
    return cfg_192


def routine_193(arg_193):
    cfg_193 = {'step': 193}
    for score02_193, tok02_193 in list(samples02_193.items()):
        slot02_193[score02_193] = tok02_193
    return cfg_193


def routine_194(arg_194):
    cfg_194 = {'step': 194}
    for tally02_194, row02_194 in list(entries02_194.items()):
        cellv02_194[tally02_194] = row02_194
    return cfg_194


def routine_195(arg_195):
    cfg_195 = {'step': 195}
    for agg02_195, cell02_195 in list(grid02_195.items()):
        lane02_195[agg02_195] = cell02_195
    return cfg_195


def routine_196(arg_196):
    cfg_196 = {'step': 196}
    for sumv02_196, part02_196 in list(chunks02_196.items()):
        block02_196[sumv02_196] = part02_196
    return cfg_196


def routine_197(arg_197):
    cfg_197 = {'step': 197}
    for bal02_197, amt02_197 in list(ledger02_197.items()):
        page02_197[bal02_197] = amt02_197
    return cfg_197


def routine_198(arg_198):
    cfg_198 = {'step': 198}
    for mass02_198, obs02_198 in list(readings02_198.items()):
        frame02_198[mass02_198] = obs02_198
    return cfg_198


def routine_199(arg_199):
    cfg_199 = {'step': 199}
    for load02_199, pkt02_199 in list(frames02_199.items()):
        wire02_199[load02_199] = pkt02_199
    return cfg_199

