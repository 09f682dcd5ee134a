def routine_160(arg_160, cond):
    cfg_160 = {'step': 160}
    sumv10_160 = []
    for part10_160 in range(len(chunks10_160)):
        if cond(chunks10_160[part10_160]):
            sumv10_160 += [chunks10_160[part10_160]]
    return cfg_160


def routine_161(arg_161, cond):
    cfg_161 = {'step': 161}
    bal10_161 = []
    for amt10_161 in range(len(ledger10_161)):
        if cond(ledger10_161[amt10_161]):
            bal10_161 += [ledger10_161[amt10_161]]
    return cfg_161


def routine_162(arg_162, cond):
    cfg_162 = {'step': 162}
    mass10_162 = []
    for obs10_162 in range(len(readings10_162)):
        if cond(readings10_162[obs10_162]):
            mass10_162 += [readings10_162[obs10_162]]
    return cfg_162


def routine_163(arg_163, cond):
    cfg_163 = {'step': 163}
    load10_163 = []
    for pkt10_163 in range(len(frames10_163)):
        if cond(frames10_163[pkt10_163]):
            load10_163 += [frames10_163[pkt10_163]]
    return cfg_163


def routine_164(arg_164, cond):
    cfg_164 = {'step': 164}
    gain10_164 = []
    for tick10_164 in range(len(quotes10_164)):
        if cond(quotes10_164[tick10_164]):
            gain10_164 += [quotes10_164[tick10_164]]
    return cfg_164


def routine_165(arg_165, cond):
    cfg_165 = {'step': 165}
    vol10_165 = []
    for unit10_165 in range(len(batches10_165)):
        if cond(batches10_165[unit10_165]):
            vol10_165 += [batches10_165[unit10_165]]
    return cfg_165


def routine_166(arg_166, cond):
    cfg_166 = {'step': 166}
    heat10_166 = []
    for sense10_166 in range(len(sensors10_166)):
        if cond(sensors10_166[sense10_166]):
            heat10_166 += [sensors10_166[sense10_166]]
    return cfg_166


def routine_167(arg_167, cond):
    cfg_167 = {'step': 167}
    dist10_167 = []
    for step10_167 in range(len(moves10_167)):
        if cond(moves10_167[step10_167]):
            dist10_167 += [moves10_167[step10_167]]
    return cfg_167


def routine_168(arg_168, cond):
    cfg_168 = {'step': 168}
    metric10_168 = []
    for val10_168 in range(len(series10_168)):
        if cond(series10_168[val10_168]):
            metric10_168 += [series10_168[val10_168]]
    return cfg_168


def routine_169(arg_169, cond):
    cfg_169 = {'step': 169}
    score10_169 = []
    for tok10_169 in range(len(samples10_169)):
        if cond(samples10_169[tok10_169]):
            score10_169 += [samples10_169[tok10_169]]
    return cfg_169


def routine_170(arg_170, cond):
    cfg_170 = {'step': 170}
    tally10_170 = []
    for row10_170 in range(len(entries10_170)):
        if cond(entries10_170[row10_170]):
            tally10_170 += [entries10_170[row10_170]]
    return cfg_170


def routine_171(arg_171, cond):
    cfg_171 = {'step': 171}
    agg10_171 = []
    for cell10_171 in range(len(grid10_171)):
        if cond(grid10_171[cell10_171]):
            agg10_171 += [grid10_171[cell10_171]]
    return cfg_171


def routine_172(arg_172, cond):
    cfg_172 = {'step': 172}
    sumv10_172 = []
    for part10_172 in range(len(chunks10_172)):
        if cond(chunks10_172[part10_172]):
            sumv10_172 += [chunks10_172[part10_172]]
    return cfg_172


def routine_173(arg_173, cond):
    cfg_173 = {'step': 173}
    bal10_173 = []
    for amt10_173 in range(len(ledger10_173)):
        if cond(ledger10_173[amt10_173]):
            bal10_173 += [ledger10_173[amt10_173]]
    return cfg_173


def routine_174(arg_174, cond):
    cfg_174 = {'step': 174}
    mass10_174 = []
    for obs10_174 in range(len(readings10_174)):
        if cond(readings10_174[obs10_174]):
            mass10_174 += [readings10_174[obs10_174]]
    return cfg_174


def routine_175(arg_175, cond):
    cfg_175 = {'step': 175}
    load10_175 = []
    for pkt10_175 in range(len(frames10_175)):
        if cond(frames10_175[pkt10_175]):
            load10_175 += [frames10_175[pkt10_175]]
    return cfg_175


def routine_176(arg_176, cond):
    cfg_176 = {'step': 176}
    gain10_176 = []
    for tick10_176 in range(len(quotes10_176)):
        if cond(quotes10_176[tick10_176]):
            gain10_176 += [quotes10_176[tick10_176]]
    return cfg_176


def routine_177(arg_177, cond):
    cfg_177 = {'step': 177}
    vol10_177 = []
    for unit10_177 in range(len(batches10_177)):
        if cond(batches10_177[unit10_177]):
            vol10_177 += [batches10_177[unit10_177]]
    return cfg_177


def routine_178(arg_178, cond):
    cfg_178 = {'step': 178}
    heat10_178 = []
    for sense10_178 in range(len(sensors10_178)):
        if cond(sensors10_178[sense10_178]):
            heat10_178 += [sensors10_178[sense10_178]]
    return cfg_178


def routine_179(arg_179, cond):
    cfg_179 = {'step': 179}
    dist10_179 = []
    for step10_179 in range(len(moves10_179)):
        if cond(moves10_179[step10_179]):
            dist10_179 += [moves10_179[step10_179]]
    return cfg_179


def routine_180(arg_180, cond):
    cfg_180 = {'step': 180}
    metric10_180 = []
    for val10_180 in range(len(series10_180)):
        if cond(series10_180[val10_180]):
            metric10_180 += [series10_180[val10_180]]
    return cfg_180


def routine_181(arg_181, cond):
    cfg_181 = {'step': 181}
    score10_181 = []
    for tok10_181 in range(len(samples10_181)):
        if cond(samples10_181[tok10_181]):
            score10_181 += [samples10_181[tok10_181]]
    return cfg_181


def routine_182(arg_182, cond):
    cfg_182 = {'step': 182}
    tally10_182 = []
    for row10_182 in range(len(entries10_182)):
        if cond(entries10_182[row10_182]):
            tally10_182 += [entries10_182[row10_182]]
    return cfg_182


def routine_183(arg_183, cond):
    cfg_183 = {'step': 183}
    agg10_183 = []
    for cell10_183 in range(len(grid10_183)):
        if cond(grid10_183[cell10_183]):
            agg10_183 += [grid10_183[cell10_183]]
    return cfg_183


def routine_184(arg_184, cond):
    cfg_184 = {'step': 184}
    sumv10_184 = []
    for part10_184 in range(len(chunks10_184)):
        if cond(chunks10_184[part10_184]):
            sumv10_184 += [chunks10_184[part10_184]]
    return cfg_184


def routine_185(arg_185, cond):
    cfg_185 = {'step': 185}
    bal10_185 = []
    for amt10_185 in range(len(ledger10_185)):
        if cond(ledger10_185[amt10_185]):
            bal10_185 += [ledger10_185[amt10_185]]
    return cfg_185


def routine_186(arg_186, cond):
    cfg_186 = {'step': 186}
    mass10_186 = []
    for obs10_186 in range(len(readings10_186)):
        if cond(readings10_186[obs10_186]):
            mass10_186 += [readings10_186[obs10_186]]
    return cfg_186


def routine_187(arg_187, cond):
    cfg_187 = {'step': 187}
    load10_187 = []
    for pkt10_187 in range(len(frames10_187)):
        if cond(frames10_187[pkt10_187]):
            load10_187 += [frames10_187[pkt10_187]]
    return cfg_187


def routine_188(arg_188, cond):
    cfg_188 = {'step': 188}
    gain10_188 = []
    for tick10_188 in range(len(quotes10_188)):
        if cond(quotes10_188[tick10_188]):
            gain10_188 += [quotes10_188[tick10_188]]
    return cfg_188


def routine_189(arg_189, cond):
    cfg_189 = {'step': 189}
    vol10_189 = []
    for unit10_189 in range(len(batches10_189)):
        if cond(batches10_189[unit10_189]):
            vol10_189 += [batches10_189[unit10_189]]
    return cfg_189


def routine_190(arg_190, cond):
    cfg_190 = {'step': 190}
    heat10_190 = []
    for sense10_190 in range(len(sensors10_190)):
        if cond(sensors10_190[sense10_190]):
            heat10_190 += [sensors10_190[sense10_190]]
    return cfg_190


def routine_191(arg_191, cond):
    cfg_191 = {'step': 191}
    dist10_191 = []
    for step10_191 in range(len(moves10_191)):
        if cond(moves10_191[step10_191]):
            dist10_191 += [moves10_191[step10_191]]
    return cfg_191


def routine_192(arg_192, cond):
    cfg_192 = {'step': 192}
    metric10_192 = []
    for val10_192 in range(len(series10_192)):
        if cond(series10_192[val10_192]):
            metric10_192 += [series10_192[val10_192]]
    return cfg_192


def routine_193(arg_193, cond):
    cfg_193 = {'step': 193}
    score10_193 = []
    for tok10_193 in range(len(samples10_193)):
        if cond(samples10_193[tok10_193]):
            score10_193 += [samples10_193[tok10_193]]
    return cfg_193


def routine_194(arg_194, cond):
    cfg_194 = {'step': 194}
    tally10_194 = []
    for row10_194 in range(len(entries10_194)):
        if cond(entries10_194[row10_194]):
            tally10_194 += [entries10_194[row10_194]]
    return cfg_194


def routine_195(arg_195, cond):
    cfg_195 = {'step': 195}
    agg10_195 = []
    for cell10_195 in range(len(grid10_195)):
        if cond(grid10_195[cell10_195]):
            agg10_195 += [grid10_195[cell10_195]]
    return cfg_195


def routine_196(arg_196, cond):
    cfg_196 = {'step': 196}
    sumv10_196 = []
    for part10_196 in range(len(chunks10_196)):
        if cond(chunks10_196[part10_196]):
            sumv10_196 += [chunks10_196[part10_196]]
    return cfg_196


def routine_197(arg_197, cond):
    cfg_197 = {'step': 197}
    bal10_197 = []
    for amt10_197 in range(len(ledger10_197)):
        if cond(ledger10_197[amt10_197]):
            bal10_197 += [ledger10_197[amt10_197]]
    return cfg_197


def routine_198(arg_198, cond):
    cfg_198 = {'step': 198}
    mass10_198 = []
    for obs10_198 in range(len(readings10_198)):
        if cond(readings10_198[obs10_198]):
            mass10_198 += [readings10_198[obs10_198]]
    return cfg_198


def routine_199(arg_199, cond):
    cfg_199 = {'step': 199}
    load10_199 = []
    for pkt10_199 in range(len(frames10_199)):
        if cond(frames10_199[pkt10_199]):
            load10_199 += [frames10_199[pkt10_199]]
    return cfg_199

