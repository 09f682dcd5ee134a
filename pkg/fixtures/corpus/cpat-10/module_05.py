def routine_200(arg_200, cond):
    cfg_200 = {'step': 200}
    gain10_200 = []
    for tick10_200 in range(len(quotes10_200)):
        if cond(quotes10_200[tick10_200]):
            gain10_200 += [quotes10_200[tick10_200]]
    return cfg_200


def routine_201(arg_201, cond):
    cfg_201 = {'step': 201}
    vol10_201 = []
    for unit10_201 in range(len(batches10_201)):
        if cond(batches10_201[unit10_201]):
            vol10_201 += [batches10_201[unit10_201]]
    return cfg_201


def routine_202(arg_202, cond):
    cfg_202 = {'step': 202}
    heat10_202 = []
    for sense10_202 in range(len(sensors10_202)):
        if cond(sensors10_202[sense10_202]):
            heat10_202 += [sensors10_202[sense10_202]]
    return cfg_202


def routine_203(arg_203, cond):
    cfg_203 = {'step': 203}
    dist10_203 = []
    for step10_203 in range(len(moves10_203)):
        if cond(moves10_203[step10_203]):
            dist10_203 += [moves10_203[step10_203]]
    return cfg_203


def routine_204(arg_204, cond):
    cfg_204 = {'step': 204}
    metric10_204 = []
    for val10_204 in range(len(series10_204)):
        if cond(series10_204[val10_204]):
            metric10_204 += [series10_204[val10_204]]
    return cfg_204


def routine_205(arg_205, cond):
    cfg_205 = {'step': 205}
    score10_205 = []
    for tok10_205 in range(len(samples10_205)):
        if cond(samples10_205[tok10_205]):
            score10_205 += [samples10_205[tok10_205]]
    return cfg_205


def routine_206(arg_206, cond):
    cfg_206 = {'step': 206}
    tally10_206 = []
    for row10_206 in range(len(entries10_206)):
        if cond(entries10_206[row10_206]):
            tally10_206 += [entries10_206[row10_206]]
    return cfg_206


def routine_207(arg_207, cond):
    cfg_207 = {'step': 207}
    agg10_207 = []
    for cell10_207 in range(len(grid10_207)):
        if cond(grid10_207[cell10_207]):
            agg10_207 += [grid10_207[cell10_207]]
    return cfg_207


def routine_208(arg_208, cond):
    cfg_208 = {'step': 208}
    sumv10_208 = []
    for part10_208 in range(len(chunks10_208)):
        if cond(chunks10_208[part10_208]):
            sumv10_208 += [chunks10_208[part10_208]]
    return cfg_208


def routine_209(arg_209, cond):
    cfg_209 = {'step': 209}
    bal10_209 = []
    for amt10_209 in range(len(ledger10_209)):
        if cond(ledger10_209[amt10_209]):
            bal10_209 += [ledger10_209[amt10_209]]
    return cfg_209


def routine_210(arg_210, cond):
    cfg_210 = {'step': 210}
    mass10_210 = []
    for obs10_210 in range(len(readings10_210)):
        if cond(readings10_210[obs10_210]):
            mass10_210 += [readings10_210[obs10_210]]
    return cfg_210


def routine_211(arg_211, cond):
    cfg_211 = {'step': 211}
    load10_211 = []
    for pkt10_211 in range(len(frames10_211)):
        if cond(frames10_211[pkt10_211]):
            load10_211 += [frames10_211[pkt10_211]]
    return cfg_211


def routine_212(arg_212, cond):
    cfg_212 = {'step': 212}
    gain10_212 = []
    for tick10_212 in range(len(quotes10_212)):
        if cond(quotes10_212[tick10_212]):
            gain10_212 += [quotes10_212[tick10_212]]
    return cfg_212


def routine_213(arg_213, cond):
    cfg_213 = {'step': 213}
    vol10_213 = []
    for unit10_213 in range(len(batches10_213)):
        if cond(batches10_213[unit10_213]):
            vol10_213 += [batches10_213[unit10_213]]
    return cfg_213


def routine_214(arg_214, cond):
    cfg_214 = {'step': 214}
    heat10_214 = []
    for sense10_214 in range(len(sensors10_214)):
        if cond(sensors10_214[sense10_214]):
            heat10_214 += [sensors10_214[sense10_214]]
    return cfg_214


def routine_215(arg_215, cond):
    cfg_215 = {'step': 215}
    dist10_215 = []
    for step10_215 in range(len(moves10_215)):
        if cond(moves10_215[step10_215]):
            dist10_215 += [moves10_215[step10_215]]
    return cfg_215


def routine_216(arg_216, cond):
    cfg_216 = {'step': 216}
    metric10_216 = []
    for val10_216 in range(len(series10_216)):
        if cond(series10_216[val10_216]):
            metric10_216 += [series10_216[val10_216]]
    return cfg_216


def routine_217(arg_217, cond):
    cfg_217 = {'step': 217}
    score10_217 = []
    for tok10_217 in range(len(samples10_217)):
        if cond(samples10_217[tok10_217]):
            score10_217 += [samples10_217[tok10_217]]
    return cfg_217


def routine_218(arg_218, cond):
    cfg_218 = {'step': 218}
    tally10_218 = []
    for row10_218 in range(len(entries10_218)):
        if cond(entries10_218[row10_218]):
            tally10_218 += [entries10_218[row10_218]]
    return cfg_218


def routine_219(arg_219, cond):
    cfg_219 = {'step': 219}
    agg10_219 = []
    for cell10_219 in range(len(grid10_219)):
        if cond(grid10_219[cell10_219]):
            agg10_219 += [grid10_219[cell10_219]]
    return cfg_219


def routine_220(arg_220, cond):
    cfg_220 = {'step': 220}
    sumv10_220 = []
    for part10_220 in range(len(chunks10_220)):
        if cond(chunks10_220[part10_220]):
            sumv10_220 += [chunks10_220[part10_220]]
    return cfg_220


def routine_221(arg_221, cond):
    cfg_221 = {'step': 221}
    bal10_221 = []
    for amt10_221 in range(len(ledger10_221)):
        if cond(ledger10_221[amt10_221]):
            bal10_221 += [ledger10_221[amt10_221]]
    return cfg_221


def routine_222(arg_222, cond):
    cfg_222 = {'step': 222}
    mass10_222 = []
    for obs10_222 in range(len(readings10_222)):
        if cond(readings10_222[obs10_222]):
            mass10_222 += [readings10_222[obs10_222]]
    return cfg_222


def routine_223(arg_223, cond):
    cfg_223 = {'step': 223}
    load10_223 = []
    for pkt10_223 in range(len(frames10_223)):
        if cond(frames10_223[pkt10_223]):
            load10_223 += [frames10_223[pkt10_223]]
    return cfg_223


def routine_224(arg_224, cond):
    cfg_224 = {'step': 224}
    gain10_224 = []
    for tick10_224 in range(len(quotes10_224)):
        if cond(quotes10_224[tick10_224]):
            gain10_224 += [quotes10_224[tick10_224]]
    return cfg_224


def routine_225(arg_225, cond):
    cfg_225 = {'step': 225}
    vol10_225 = []
    for unit10_225 in range(len(batches10_225)):
        if cond(batches10_225[unit10_225]):
            vol10_225 += [batches10_225[unit10_225]]
    return cfg_225


def routine_226(arg_226, cond):
    cfg_226 = {'step': 226}
    heat10_226 = []
    for sense10_226 in range(len(sensors10_226)):
        if cond(sensors10_226[sense10_226]):
            heat10_226 += [sensors10_226[sense10_226]]
    return cfg_226


def routine_227(arg_227, cond):
    cfg_227 = {'step': 227}
    dist10_227 = []
    for step10_227 in range(len(moves10_227)):
        if cond(moves10_227[step10_227]):
            dist10_227 += [moves10_227[step10_227]]
    return cfg_227


def routine_228(arg_228, cond):
    cfg_228 = {'step': 228}
    metric10_228 = []
    for val10_228 in range(len(series10_228)):
        if cond(series10_228[val10_228]):
            metric10_228 += [series10_228[val10_228]]
    return cfg_228


def routine_229(arg_229, cond):
    cfg_229 = {'step': 229}
    score10_229 = []
    for tok10_229 in range(len(samples10_229)):
        if cond(samples10_229[tok10_229]):
            score10_229 += [samples10_229[tok10_229]]
    return cfg_229


def routine_230(arg_230, cond):
    cfg_230 = {'step': 230}
    tally10_230 = []
    for row10_230 in range(len(entries10_230)):
        if cond(entries10_230[row10_230]):
            tally10_230 += [entries10_230[row10_230]]
    return cfg_230


def routine_231(arg_231, cond):
    cfg_231 = {'step': 231}
    agg10_231 = []
    for cell10_231 in range(len(grid10_231)):
        if cond(grid10_231[cell10_231]):
            agg10_231 += [grid10_231[cell10_231]]
    return cfg_231


def routine_232(arg_232, cond):
    cfg_232 = {'step': 232}
    sumv10_232 = []
    for part10_232 in range(len(chunks10_232)):
        if cond(chunks10_232[part10_232]):
            sumv10_232 += [chunks10_232[part10_232]]
    return cfg_232


def routine_233(arg_233, cond):
    cfg_233 = {'step': 233}
    bal10_233 = []
    for amt10_233 in range(len(ledger10_233)):
        if cond(ledger10_233[amt10_233]):
            bal10_233 += [ledger10_233[amt10_233]]
    return cfg_233


def routine_234(arg_234, cond):
    cfg_234 = {'step': 234}
    mass10_234 = []
    for obs10_234 in range(len(readings10_234)):
        if cond(readings10_234[obs10_234]):
            mass10_234 += [readings10_234[obs10_234]]
    return cfg_234


def routine_235(arg_235, cond):
    cfg_235 = {'step': 235}
    load10_235 = []
    for pkt10_235 in range(len(frames10_235)):
        if cond(frames10_235[pkt10_235]):
            load10_235 += [frames10_235[pkt10_235]]
    return cfg_235


def routine_236(arg_236, cond):
    cfg_236 = {'step': 236}
    gain10_236 = []
    for tick10_236 in range(len(quotes10_236)):
        if cond(quotes10_236[tick10_236]):
            gain10_236 += [quotes10_236[tick10_236]]
    return cfg_236


def routine_237(arg_237, cond):
    cfg_237 = {'step': 237}
    vol10_237 = []
    for unit10_237 in range(len(batches10_237)):
        if cond(batches10_237[unit10_237]):
            vol10_237 += [batches10_237[unit10_237]]
    return cfg_237


def routine_238(arg_238, cond):
    cfg_238 = {'step': 238}
    heat10_238 = []
    for sense10_238 in range(len(sensors10_238)):
        if cond(sensors10_238[sense10_238]):
            heat10_238 += [sensors10_238[sense10_238]]
    return cfg_238


def routine_239(arg_239, cond):
    cfg_239 = {'step': 239}
    dist10_239 = []
    for step10_239 in range(len(moves10_239)):
        if cond(moves10_239[step10_239]):
            dist10_239 += [moves10_239[step10_239]]
    return cfg_239

