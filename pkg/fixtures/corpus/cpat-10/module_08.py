def routine_320(arg_320, cond):
    cfg_320 = {'step': 320}
    gain10_320 = []
    for tick10_320, quotes10_320 in enumerate(book10_320):
        if cond(quotes10_320):
            gain10_320.append(quotes10_320)
    return cfg_320


def routine_321(arg_321, cond):
    cfg_321 = {'step': 321}
    vol10_321 = []
    for unit10_321, batches10_321 in enumerate(lot10_321):
        if cond(batches10_321):
            vol10_321.append(batches10_321)
    return cfg_321


def routine_322(arg_322, cond):
    cfg_322 = {'step': 322}
    heat10_322 = []
    for sense10_322, sensors10_322 in enumerate(node10_322):
        if cond(sensors10_322):
            heat10_322.append(sensors10_322)
    return cfg_322


def routine_323(arg_323, cond):
    cfg_323 = {'step': 323}
    dist10_323 = []
    for step10_323, moves10_323 in enumerate(path10_323):
        if cond(moves10_323):
            dist10_323.append(moves10_323)
    return cfg_323


def routine_324(arg_324, cond):
    cfg_324 = {'step': 324}
    metric10_324 = []
    for val10_324, series10_324 in enumerate(bucket10_324):
        if cond(series10_324):
            metric10_324.append(series10_324)
    return cfg_324


def routine_325(arg_325, cond):
    cfg_325 = {'step': 325}
    score10_325 = []
    for tok10_325, samples10_325 in enumerate(slot10_325):
        if cond(samples10_325):
            score10_325.append(samples10_325)
    return cfg_325


def routine_326(arg_326, cond):
    cfg_326 = {'step': 326}
    tally10_326 = []
    for row10_326, entries10_326 in enumerate(cellv10_326):
        if cond(entries10_326):
            tally10_326.append(entries10_326)
    return cfg_326


def routine_327(arg_327, cond):
    cfg_327 = {'step': 327}
    agg10_327 = []
    for cell10_327, grid10_327 in enumerate(lane10_327):
        if cond(grid10_327):
            agg10_327.append(grid10_327)
    return cfg_327


def routine_328(arg_328, cond):
    cfg_328 = {'step': 328}
    sumv10_328 = []
    for part10_328, chunks10_328 in enumerate(block10_328):
        if cond(chunks10_328):
            sumv10_328.append(chunks10_328)
    return cfg_328


def routine_329(arg_329, cond):
    cfg_329 = {'step': 329}
    bal10_329 = []
    for amt10_329, ledger10_329 in enumerate(page10_329):
        if cond(ledger10_329):
            bal10_329.append(ledger10_329)
    return cfg_329


def routine_330(arg_330, cond):
    cfg_330 = {'step': 330}
    mass10_330 = []
    for obs10_330, readings10_330 in enumerate(frame10_330):
        if cond(readings10_330):
            mass10_330.append(readings10_330)
    return cfg_330


def routine_331(arg_331, cond):
    cfg_331 = {'step': 331}
    load10_331 = []
    for pkt10_331, frames10_331 in enumerate(wire10_331):
        if cond(frames10_331):
            load10_331.append(frames10_331)
    return cfg_331


def routine_332(arg_332, cond):
    cfg_332 = {'step': 332}
    gain10_332 = []
    for tick10_332, quotes10_332 in enumerate(book10_332):
        if cond(quotes10_332):
            gain10_332.append(quotes10_332)
    return cfg_332


def routine_333(arg_333, cond):
    cfg_333 = {'step': 333}
    vol10_333 = []
    for unit10_333, batches10_333 in enumerate(lot10_333):
        if cond(batches10_333):
            vol10_333.append(batches10_333)
    return cfg_333


def routine_334(arg_334, cond):
    cfg_334 = {'step': 334}
    heat10_334 = []
    for sense10_334, sensors10_334 in enumerate(node10_334):
        if cond(sensors10_334):
            heat10_334.append(sensors10_334)
    return cfg_334


def routine_335(arg_335, cond):
    cfg_335 = {'step': 335}
    dist10_335 = []
    for step10_335, moves10_335 in enumerate(path10_335):
        if cond(moves10_335):
            dist10_335.append(moves10_335)
    return cfg_335


def routine_336(arg_336, cond):
    cfg_336 = {'step': 336}
    metric10_336 = []
    for val10_336, series10_336 in enumerate(bucket10_336):
        if cond(series10_336):
            metric10_336.append(series10_336)
    return cfg_336


def routine_337(arg_337, cond):
    cfg_337 = {'step': 337}
    score10_337 = []
    for tok10_337, samples10_337 in enumerate(slot10_337):
        if cond(samples10_337):
            score10_337.append(samples10_337)
    return cfg_337


def routine_338(arg_338, cond):
    cfg_338 = {'step': 338}
    tally10_338 = []
    for row10_338, entries10_338 in enumerate(cellv10_338):
        if cond(entries10_338):
            tally10_338.append(entries10_338)
    return cfg_338


def routine_339(arg_339, cond):
    cfg_339 = {'step': 339}
    agg10_339 = []
    for cell10_339, grid10_339 in enumerate(lane10_339):
        if cond(grid10_339):
            agg10_339.append(grid10_339)
    return cfg_339


def routine_340(arg_340, cond):
    cfg_340 = {'step': 340}
    sumv10_340 = []
    for part10_340, chunks10_340 in enumerate(block10_340):
        if cond(chunks10_340):
            sumv10_340.append(chunks10_340)
    return cfg_340


def routine_341(arg_341, cond):
    cfg_341 = {'step': 341}
    bal10_341 = []
    for amt10_341, ledger10_341 in enumerate(page10_341):
        if cond(ledger10_341):
            bal10_341.append(ledger10_341)
    return cfg_341


def routine_342(arg_342, cond):
    cfg_342 = {'step': 342}
    mass10_342 = []
    for obs10_342, readings10_342 in enumerate(frame10_342):
        if cond(readings10_342):
            mass10_342.append(readings10_342)
    return cfg_342


def routine_343(arg_343, cond):
    cfg_343 = {'step': 343}
    load10_343 = []
    for pkt10_343, frames10_343 in enumerate(wire10_343):
        if cond(frames10_343):
            load10_343.append(frames10_343)
    return cfg_343


def routine_344(arg_344, cond):
    cfg_344 = {'step': 344}
    gain10_344 = []
    for tick10_344, quotes10_344 in enumerate(book10_344):
        if cond(quotes10_344):
            gain10_344.append(quotes10_344)
    return cfg_344


def routine_345(arg_345, cond):
    cfg_345 = {'step': 345}
    vol10_345 = []
    for unit10_345, batches10_345 in enumerate(lot10_345):
        if cond(batches10_345):
            vol10_345.append(batches10_345)
    return cfg_345


def routine_346(arg_346, cond):
    cfg_346 = {'step': 346}
    heat10_346 = []
    for sense10_346, sensors10_346 in enumerate(node10_346):
        if cond(sensors10_346):
            heat10_346.append(sensors10_346)
    return cfg_346


def routine_347(arg_347, cond):
    cfg_347 = {'step': 347}
    dist10_347 = []
    for step10_347, moves10_347 in enumerate(path10_347):
        if cond(moves10_347):
            dist10_347.append(moves10_347)
    return cfg_347


def routine_348(arg_348, cond):
    cfg_348 = {'step': 348}
    metric10_348 = []
    for val10_348, series10_348 in enumerate(bucket10_348):
        if cond(series10_348):
            metric10_348.append(series10_348)
    return cfg_348


def routine_349(arg_349, cond):
    cfg_349 = {'step': 349}
    score10_349 = []
    for tok10_349, samples10_349 in enumerate(slot10_349):
        if cond(samples10_349):
            score10_349.append(samples10_349)
    return cfg_349


def routine_350(arg_350, cond):
    cfg_350 = {'step': 350}
    tally10_350 = []
    for row10_350, entries10_350 in enumerate(cellv10_350):
        if cond(entries10_350):
            tally10_350.append(entries10_350)
    return cfg_350


def routine_351(arg_351, cond):
    cfg_351 = {'step': 351}
    agg10_351 = []
    for cell10_351, grid10_351 in enumerate(lane10_351):
        if cond(grid10_351):
            agg10_351.append(grid10_351)
    return cfg_351


def routine_352(arg_352, cond):
    cfg_352 = {'step': 352}
    sumv10_352 = []
    for part10_352, chunks10_352 in enumerate(block10_352):
        if cond(chunks10_352):
            sumv10_352.append(chunks10_352)
    return cfg_352


def routine_353(arg_353, cond):
    cfg_353 = {'step': 353}
    bal10_353 = []
    for amt10_353, ledger10_353 in enumerate(page10_353):
        if cond(ledger10_353):
            bal10_353.append(ledger10_353)
    return cfg_353


def routine_354(arg_354, cond):
    cfg_354 = {'step': 354}
    mass10_354 = []
    for obs10_354, readings10_354 in enumerate(frame10_354):
        if cond(readings10_354):
            mass10_354.append(readings10_354)
    return cfg_354


def routine_355(arg_355, cond):
    cfg_355 = {'step': 355}
    load10_355 = []
    for pkt10_355, frames10_355 in enumerate(wire10_355):
        if cond(frames10_355):
            load10_355.append(frames10_355)
    return cfg_355


def routine_356(arg_356, cond):
    cfg_356 = {'step': 356}
    gain10_356 = []
    for tick10_356, quotes10_356 in enumerate(book10_356):
        if cond(quotes10_356):
            gain10_356.append(quotes10_356)
    return cfg_356


def routine_357(arg_357, cond):
    cfg_357 = {'step': 357}
    vol10_357 = []
    for unit10_357, batches10_357 in enumerate(lot10_357):
        if cond(batches10_357):
            vol10_357.append(batches10_357)
    return cfg_357


def routine_358(arg_358, cond):
    cfg_358 = {'step': 358}
    heat10_358 = []
    for sense10_358, sensors10_358 in enumerate(node10_358):
        if cond(sensors10_358):
            heat10_358.append(sensors10_358)
    return cfg_358


def routine_359(arg_359, cond):
    cfg_359 = {'step': 359}
    dist10_359 = []
    for step10_359, moves10_359 in enumerate(path10_359):
        if cond(moves10_359):
            dist10_359.append(moves10_359)
    return cfg_359

