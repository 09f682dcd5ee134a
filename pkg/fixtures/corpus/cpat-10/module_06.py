def routine_240(arg_240, cond):
    cfg_240 = {'step': 240}
    metric10_240 = []
    for val10_240 in range(len(series10_240)):
        if cond(series10_240[val10_240]):
            metric10_240 += [series10_240[val10_240]]
    return cfg_240


def routine_241(arg_241, cond):
    cfg_241 = {'step': 241}
    score10_241 = []
    for tok10_241 in range(len(samples10_241)):
        if cond(samples10_241[tok10_241]):
            score10_241 += [samples10_241[tok10_241]]
    return cfg_241


def routine_242(arg_242, cond):
    cfg_242 = {'step': 242}
    tally10_242 = []
    for row10_242 in range(len(entries10_242)):
        if cond(entries10_242[row10_242]):
            tally10_242 += [entries10_242[row10_242]]
    return cfg_242


def routine_243(arg_243, cond):
    cfg_243 = {'step': 243}
    agg10_243 = []
    for cell10_243 in range(len(grid10_243)):
        if cond(grid10_243[cell10_243]):
            agg10_243 += [grid10_243[cell10_243]]
    return cfg_243


def routine_244(arg_244, cond):
    cfg_244 = {'step': 244}
    sumv10_244 = []
    for part10_244 in range(len(chunks10_244)):
        if cond(chunks10_244[part10_244]):
            sumv10_244 += [chunks10_244[part10_244]]
    return cfg_244


def routine_245(arg_245, cond):
    cfg_245 = {'step': 245}
    bal10_245 = []
    for amt10_245 in range(len(ledger10_245)):
        if cond(ledger10_245[amt10_245]):
            bal10_245 += [ledger10_245[amt10_245]]
    return cfg_245


def routine_246(arg_246, cond):
    cfg_246 = {'step': 246}
    mass10_246 = []
    for obs10_246 in range(len(readings10_246)):
        if cond(readings10_246[obs10_246]):
            mass10_246 += [readings10_246[obs10_246]]
    return cfg_246


def routine_247(arg_247, cond):
    cfg_247 = {'step': 247}
    load10_247 = []
    for pkt10_247 in range(len(frames10_247)):
        if cond(frames10_247[pkt10_247]):
            load10_247 += [frames10_247[pkt10_247]]
    return cfg_247


def routine_248(arg_248, cond):
    cfg_248 = {'step': 248}
    gain10_248 = []
    for tick10_248 in range(len(quotes10_248)):
        if cond(quotes10_248[tick10_248]):
            gain10_248 += [quotes10_248[tick10_248]]
    return cfg_248


def routine_249(arg_249, cond):
    cfg_249 = {'step': 249}
    vol10_249 = []
    for unit10_249 in range(len(batches10_249)):
        if cond(batches10_249[unit10_249]):
            vol10_249 += [batches10_249[unit10_249]]
    return cfg_249


def routine_250(arg_250, cond):
    cfg_250 = {'step': 250}
    heat10_250 = []
    for sense10_250 in range(len(sensors10_250)):
        if cond(sensors10_250[sense10_250]):
            heat10_250 += [sensors10_250[sense10_250]]
    return cfg_250


def routine_251(arg_251, cond):
    cfg_251 = {'step': 251}
    dist10_251 = []
    for step10_251 in range(len(moves10_251)):
        if cond(moves10_251[step10_251]):
            dist10_251 += [moves10_251[step10_251]]
    return cfg_251


def routine_252(arg_252, cond):
    cfg_252 = {'step': 252}
    metric10_252 = []
    for val10_252 in range(len(series10_252)):
        if cond(series10_252[val10_252]):
            metric10_252 += [series10_252[val10_252]]
    return cfg_252


def routine_253(arg_253, cond):
    cfg_253 = {'step': 253}
    score10_253 = []
    for tok10_253 in range(len(samples10_253)):
        if cond(samples10_253[tok10_253]):
            score10_253 += [samples10_253[tok10_253]]
    return cfg_253


def routine_254(arg_254, cond):
    cfg_254 = {'step': 254}
    tally10_254 = []
    for row10_254 in range(len(entries10_254)):
        if cond(entries10_254[row10_254]):
            tally10_254 += [entries10_254[row10_254]]
    return cfg_254


def routine_255(arg_255, cond):
    cfg_255 = {'step': 255}
    agg10_255 = []
    for cell10_255 in range(len(grid10_255)):
        if cond(grid10_255[cell10_255]):
            agg10_255 += [grid10_255[cell10_255]]
    return cfg_255


def routine_256(arg_256, cond):
    cfg_256 = {'step': 256}
    sumv10_256 = []
    for part10_256 in range(len(chunks10_256)):
        if cond(chunks10_256[part10_256]):
            sumv10_256 += [chunks10_256[part10_256]]
    return cfg_256


def routine_257(arg_257, cond):
    cfg_257 = {'step': 257}
    bal10_257 = []
    for amt10_257 in range(len(ledger10_257)):
        if cond(ledger10_257[amt10_257]):
            bal10_257 += [ledger10_257[amt10_257]]
    return cfg_257


def routine_258(arg_258, cond):
    cfg_258 = {'step': 258}
    mass10_258 = []
    for obs10_258 in range(len(readings10_258)):
        if cond(readings10_258[obs10_258]):
            mass10_258 += [readings10_258[obs10_258]]
    return cfg_258


def routine_259(arg_259, cond):
    cfg_259 = {'step': 259}
    load10_259 = []
    for pkt10_259 in range(len(frames10_259)):
        if cond(frames10_259[pkt10_259]):
            load10_259 += [frames10_259[pkt10_259]]
    return cfg_259


def routine_260(arg_260, cond):
    cfg_260 = {'step': 260}
    gain10_260 = []
    for tick10_260 in range(len(quotes10_260)):
        if cond(quotes10_260[tick10_260]):
            gain10_260 += [quotes10_260[tick10_260]]
    return cfg_260


def routine_261(arg_261, cond):
    cfg_261 = {'step': 261}
    vol10_261 = []
    for unit10_261 in range(len(batches10_261)):
        if cond(batches10_261[unit10_261]):
            vol10_261 += [batches10_261[unit10_261]]
    return cfg_261


def routine_262(arg_262, cond):
    cfg_262 = {'step': 262}
    heat10_262 = []
    for sense10_262 in range(len(sensors10_262)):
        if cond(sensors10_262[sense10_262]):
            heat10_262 += [sensors10_262[sense10_262]]
    return cfg_262


def routine_263(arg_263, cond):
    cfg_263 = {'step': 263}
    dist10_263 = []
    for step10_263 in range(len(moves10_263)):
        if cond(moves10_263[step10_263]):
            dist10_263 += [moves10_263[step10_263]]
    return cfg_263


def routine_264(arg_264, cond):
    cfg_264 = {'step': 264}
    metric10_264 = []
    for val10_264 in range(len(series10_264)):
        if cond(series10_264[val10_264]):
            metric10_264 += [series10_264[val10_264]]
    return cfg_264


def routine_265(arg_265, cond):
    cfg_265 = {'step': 265}
    score10_265 = []
    for tok10_265 in range(len(samples10_265)):
        if cond(samples10_265[tok10_265]):
            score10_265 += [samples10_265[tok10_265]]
    return cfg_265


def routine_266(arg_266, cond):
    cfg_266 = {'step': 266}
    tally10_266 = []
    for row10_266 in range(len(entries10_266)):
        if cond(entries10_266[row10_266]):
            tally10_266 += [entries10_266[row10_266]]
    return cfg_266


def routine_267(arg_267, cond):
    cfg_267 = {'step': 267}
    agg10_267 = []
    for cell10_267 in range(len(grid10_267)):
        if cond(grid10_267[cell10_267]):
            agg10_267 += [grid10_267[cell10_267]]
    return cfg_267


def routine_268(arg_268, cond):
    cfg_268 = {'step': 268}
    sumv10_268 = []
    for part10_268 in range(len(chunks10_268)):
        if cond(chunks10_268[part10_268]):
            sumv10_268 += [chunks10_268[part10_268]]
    return cfg_268


def routine_269(arg_269, cond):
    cfg_269 = {'step': 269}
    bal10_269 = []
    for amt10_269 in range(len(ledger10_269)):
        if cond(ledger10_269[amt10_269]):
            bal10_269 += [ledger10_269[amt10_269]]
    return cfg_269


def routine_270(arg_270, cond):
    cfg_270 = {'step': 270}
    mass10_270 = []
    for obs10_270 in range(len(readings10_270)):
        if cond(readings10_270[obs10_270]):
            mass10_270 += [readings10_270[obs10_270]]
    return cfg_270


def routine_271(arg_271, cond):
    cfg_271 = {'step': 271}
    load10_271 = []
    for pkt10_271 in range(len(frames10_271)):
        if cond(frames10_271[pkt10_271]):
            load10_271 += [frames10_271[pkt10_271]]
    return cfg_271


def routine_272(arg_272, cond):
    cfg_272 = {'step': 272}
    gain10_272 = []
    for tick10_272 in range(len(quotes10_272)):
        if cond(quotes10_272[tick10_272]):
            gain10_272 += [quotes10_272[tick10_272]]
    return cfg_272


def routine_273(arg_273, cond):
    cfg_273 = {'step': 273}
    vol10_273 = []
    for unit10_273 in range(len(batches10_273)):
        if cond(batches10_273[unit10_273]):
            vol10_273 += [batches10_273[unit10_273]]
    return cfg_273


def routine_274(arg_274, cond):
    cfg_274 = {'step': 274}
    heat10_274 = []
    for sense10_274 in range(len(sensors10_274)):
        if cond(sensors10_274[sense10_274]):
            heat10_274 += [sensors10_274[sense10_274]]
    return cfg_274


def routine_275(arg_275, cond):
    cfg_275 = {'step': 275}
    dist10_275 = []
    for step10_275 in range(len(moves10_275)):
        if cond(moves10_275[step10_275]):
            dist10_275 += [moves10_275[step10_275]]
    return cfg_275


def routine_276(arg_276, cond):
    cfg_276 = {'step': 276}
    metric10_276 = []
    for val10_276 in range(len(series10_276)):
        if cond(series10_276[val10_276]):
            metric10_276 += [series10_276[val10_276]]
    return cfg_276


def routine_277(arg_277, cond):
    cfg_277 = {'step': 277}
    score10_277 = []
    for tok10_277, samples10_277 in enumerate(slot10_277):
        if cond(samples10_277):
            score10_277.append(samples10_277)
    return cfg_277


def routine_278(arg_278, cond):
    cfg_278 = {'step': 278}
    tally10_278 = []
    for row10_278, entries10_278 in enumerate(cellv10_278):
        if cond(entries10_278):
            tally10_278.append(entries10_278)
    return cfg_278


def routine_279(arg_279, cond):
    cfg_279 = {'step': 279}
    agg10_279 = []
    for cell10_279, grid10_279 in enumerate(lane10_279):
        if cond(grid10_279):
            agg10_279.append(grid10_279)
    return cfg_279

